#ifndef BMLAB_REGIONS_HPP
#define BMLAB_REGIONS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bmlab/game.hpp"
#include "bmlab/poset.hpp"

namespace bmlab {

using BigNat = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Basic clopen [s] of Baire space: all sequences extending s.
struct BaireRegion {
  std::vector<BigNat> seq;

  friend bool operator==(const BaireRegion&, const BaireRegion&) = default;
};

/// "<2,5,5>"; the root is "<>".
std::string format_baire(const BaireRegion& r);
/// Accepts "<2,5,5>", "2 5 5", or "" / "<>" for the root.
BaireRegion parse_baire(std::string_view text);

/// Shorter first, then lexicographic on symbols.
bool shortlex_less(const BaireRegion& a, const BaireRegion& b);

class BaireSystem {
 public:
  using Region = BaireRegion;

  std::string name() const { return "baire"; }
  Region root() const { return {}; }
  bool is_valid(const Region&) const { return true; }
  /// [a] inside [b] iff b is a prefix of a.
  bool is_subset(const Region& a, const Region& b) const;
  std::string format(const Region& r) const { return format_baire(r); }
  Region parse(std::string_view text) const { return parse_baire(text); }

  /// Appends a uniform symbol in 0..9; below the root a coin flip may
  /// append one more.
  std::optional<Region> sample_refinement(const Region& r, std::uint64_t seed) const;
  /// Basic clopens are closed, so appending 0 qualifies.
  Region closed_refinement(const Region& r) const;
  /// The longest sequence extended by zeros lies in every region of a nested chain.
  std::optional<std::string> witness_point(std::span<const Region> chain) const;
};

/// Finite union of disjoint open rational intervals, sorted.
struct IntervalRegion {
  std::vector<std::pair<Rational, Rational>> parts;

  friend bool operator==(const IntervalRegion&, const IntervalRegion&) = default;
};

/// Regions live inside a fixed open interval universe, (0,1) by default.
/// Nested rational intervals can close down on an irrational, so no finite
/// play is ever certified here.
class IntervalSystem {
 public:
  using Region = IntervalRegion;

  IntervalSystem() : IntervalSystem(Rational(0), Rational(1)) {}
  IntervalSystem(Rational lo, Rational hi);

  std::string name() const { return "interval"; }
  Region root() const { return {{{lo_, hi_}}}; }
  /// Nonempty, lo < hi for each part, sorted, pairwise disjoint and not
  /// touching in a way that should have merged.
  bool is_valid(const Region& r) const;
  bool is_subset(const Region& a, const Region& b) const;
  /// "(1/3,1/2) U (3/4,1)".
  std::string format(const Region& r) const;
  /// Inverse of format; overlapping parts are merged.
  Region parse(std::string_view text) const;
  /// A random tenth-grid subinterval of a random part.
  std::optional<Region> sample_refinement(const Region& r, std::uint64_t seed) const;
  std::optional<std::string> witness_point(std::span<const Region> chain) const;

  /// Sorts and merges overlapping parts; drops empty ones.
  static Region normalize(std::vector<std::pair<Rational, Rational>> parts);

 private:
  Rational lo_;
  Rational hi_;
};

std::string format_rational(const Rational& q);
Rational parse_rational(std::string_view text);

/// A finite poset as a space: element p stands for the down-set of p, and
/// the extra region "*" (index size()) for the whole space.
class PosetSystem {
 public:
  using Region = std::size_t;

  explicit PosetSystem(FinitePoset P) : P_(std::move(P)) {}

  std::string name() const { return "poset"; }
  Region root() const { return P_.size(); }
  bool is_valid(const Region& r) const { return r <= P_.size(); }
  bool is_subset(const Region& a, const Region& b) const;
  std::string format(const Region& r) const { return r == P_.size() ? "*" : P_.id(r); }
  Region parse(std::string_view text) const;
  /// A uniformly chosen strict extension, or nullopt at a minimal element.
  std::optional<Region> sample_refinement(const Region& r, std::uint64_t seed) const;
  /// The last region of a nested chain lies below all the others; any of
  /// its elements is a common point.
  std::optional<std::string> witness_point(std::span<const Region> chain) const;

  const FinitePoset& poset() const { return P_; }

 private:
  FinitePoset P_;
};

}  // namespace bmlab

#endif  // BMLAB_REGIONS_HPP
