#ifndef BMLAB_POSET_HPP
#define BMLAB_POSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bmlab/cardinal.hpp"

namespace bmlab {

/// Element subsets are bit masks over element indices (bit i = element i).
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

inline constexpr Mask bit(std::size_t i) { return Mask{1} << i; }
inline constexpr Mask low_bits(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline int popcount(Mask m) { return std::popcount(m); }

/// Element indices of a mask, ascending.
std::vector<std::size_t> mask_indices(Mask m);

/// Lexicographic order on the ascending index sequences of two masks.
bool lex_less(Mask a, Mask b);

/// A finite partial order. `leq(q, p)` reads "q extends p" (q <= p).
///
/// Elements are addressed by their declaration index; ids are kept for
/// reporting. Instances are immutable once built.
class FinitePoset {
 public:
  /// Builds from `below[p]` = {q : q <= p}. No axiom checks: use
  /// validate_poset for untrusted input.
  static FinitePoset from_below_sets(std::vector<std::string> ids, std::vector<Mask> below);

  std::size_t size() const { return ids_.size(); }
  Mask all() const { return low_bits(size()); }

  const std::string& id(std::size_t i) const { return ids_.at(i); }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<std::size_t> index_of(std::string_view id) const;
  std::size_t require_index(std::string_view id) const;

  bool leq(std::size_t q, std::size_t p) const { return (below_[p] >> q) & 1U; }
  Mask below(std::size_t p) const { return below_[p]; }
  Mask above(std::size_t q) const { return above_[q]; }

  Mask minimal_elements() const;

  /// "{a,b}" in index order.
  std::string format(Mask m) const;

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  std::vector<std::string> ids_;
  std::vector<Mask> below_;
  std::vector<Mask> above_;
};

/// Untrusted relation data: `pairs` holds (q, p) meaning q <= p.
struct RawPoset {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> pairs;
};

struct PosetViolation {
  enum class Kind { Empty, TooLarge, DuplicateId, UnknownId, Antisymmetry, Transitivity };
  Kind kind;
  std::string first;
  std::string second;

  std::string message() const;
};

using PosetOrViolation = std::variant<FinitePoset, PosetViolation>;

/// Checks the partial-order axioms. With `closure`, the reflexive-transitive
/// closure is taken first. Reflexivity is always implied.
PosetOrViolation validate_poset(const RawPoset& raw, bool closure);

/// Throws Error carrying the violation message.
FinitePoset make_poset(const RawPoset& raw, bool closure);

/// A common extension r (r <= p and r <= q), least index first.
std::optional<std::size_t> compatibility_witness(const FinitePoset& P, std::size_t p, std::size_t q);
inline bool is_compatible(const FinitePoset& P, std::size_t p, std::size_t q) {
  return (P.below(p) & P.below(q)) != 0;
}

/// Elements incompatible with p.
Mask incompatible_with(const FinitePoset& P, std::size_t p);

struct SeparativityResult {
  bool separative = true;
  /// (p, q) with q not <= p but every r <= q compatible with p.
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};
SeparativityResult is_separative(const FinitePoset& P);

/// A maximum-cardinality antichain (pairwise incompatible), by branch and
/// bound. Among maximum ones, the lexicographically least index set.
Mask max_antichain(const FinitePoset& P);

/// Least kappa with the kappa-cc: |max antichain| + 1.
Cardinal souslin_number(const FinitePoset& P);

/// Some element of P with no extension in D, or nullopt if D is dense.
std::optional<std::size_t> density_gap(const FinitePoset& P, Mask D);
inline bool is_dense(const FinitePoset& P, Mask D) { return !density_gap(P, D).has_value(); }

/// 1 + max over q of |{p in D : q <= p}|. Throws if D is not dense.
Cardinal noetherian_type(const FinitePoset& P, Mask D);

struct PiNoetherianResult {
  Cardinal value = Cardinal::finite(2);
  Mask dense = 0;
  bool exhaustively_verified = false;
};

/// Minimum Noetherian type over dense subsets. The minimal elements always
/// attain 2 on a finite poset; `exhaustive` additionally scans every dense
/// subset (|P| <= 20) and throws if the scan disagrees.
PiNoetherianResult pi_noetherian_type(const FinitePoset& P, bool exhaustive);

inline constexpr std::size_t kExhaustiveLimit = 20;

/// Q-down: elements extending every member of Q. Empty Q gives all of P.
Mask down_set(const FinitePoset& P, Mask Q);

/// Greedy pass over Q in the given order, keeping q only when it strictly
/// shrinks the running down-set. The result has the same down-set as Q.
std::vector<std::size_t> reduce_down_set(const FinitePoset& P, std::span<const std::size_t> Q);

/// D = {p_a : no earlier p_x extends p_a} for the enumeration `order`.
Mask enumeration_dense(const FinitePoset& P, std::span<const std::size_t> order);

struct NablaVerdict {
  bool holds = true;
  Cardinal pi_noetherian = Cardinal::finite(2);
  Cardinal souslin = Cardinal::finite(2);
};
NablaVerdict check_nabla(const FinitePoset& P);

}  // namespace bmlab

#endif  // BMLAB_POSET_HPP
