#ifndef BMLAB_TOPOLOGY_HPP
#define BMLAB_TOPOLOGY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmlab/poset.hpp"

namespace bmlab {

/// A topology on at most 64 points; point subsets are masks as in FinitePoset.
class FiniteSpace {
 public:
  /// Checks that `opens` contains the empty and full sets and is closed
  /// under pairwise union and intersection. Throws Error naming a witness.
  static FiniteSpace from_opens(std::vector<std::string> points, std::vector<Mask> opens);

  std::size_t size() const { return points_.size(); }
  Mask full() const { return low_bits(size()); }
  const std::string& point(std::size_t i) const { return points_.at(i); }
  const std::vector<std::string>& points() const { return points_; }
  std::size_t require_point(std::string_view id) const;

  /// All opens, sorted by lex_less (so the empty set comes first).
  const std::vector<Mask>& opens() const { return opens_; }
  bool is_open(Mask m) const;

  /// "{x,y}" in point order.
  std::string format(Mask m) const;

 private:
  std::vector<std::string> points_;
  std::vector<Mask> opens_;
};

/// Smallest topology containing the subbasis: pairwise intersections plus
/// the full set, then unions, each to a fixpoint.
FiniteSpace generate_topology(std::vector<std::string> points, const std::vector<Mask>& subbasis);

Mask interior(const FiniteSpace& X, Mask U);
Mask closure(const FiniteSpace& X, Mask U);
inline std::pair<Mask, Mask> closure_interior(const FiniteSpace& X, Mask U) { return {closure(X, U), interior(X, U)}; }
inline bool is_regular_open(const FiniteSpace& X, Mask U) { return X.is_open(U) && interior(X, closure(X, U)) == U; }

/// A family of point sets viewed as a poset under inclusion. Element i of
/// `poset` is `sets[i]`, and its id is the formatted set.
struct SetPoset {
  FinitePoset poset;
  std::vector<Mask> sets;
};

/// RO(X) minus the empty set, ordered by inclusion.
SetPoset regular_open_algebra(const FiniteSpace& X);

/// Nonempty opens ordered by inclusion; antichains here are cellular families.
SetPoset open_set_poset(const FiniteSpace& X);

struct SpacePredicates {
  bool hausdorff = true;
  bool quasi_regular = true;
  /// The refinement condition alone: every nonempty open U contains cl(V)
  /// for some nonempty open V. At finite scale Hausdorff means discrete,
  /// so this weaker form is what makes non-discrete examples interesting.
  bool pi_regular = true;
  std::optional<std::pair<std::size_t, std::size_t>> hausdorff_witness;  // unseparated points
  std::optional<Mask> refinement_witness;  // open U with no such V
};
SpacePredicates space_predicates(const FiniteSpace& X);

/// Pairwise disjoint nonempty opens.
bool is_cellular(const FiniteSpace& X, const std::vector<Mask>& family);

/// Extends `seed` by the lex-least open disjoint from everything chosen
/// until the union is dense. Throws if `seed` is not cellular.
std::vector<Mask> maximal_cellular(const FiniteSpace& X, const std::vector<Mask>& seed);

struct SpaceInvariants {
  Cardinal souslin = Cardinal::finite(2);
  Cardinal pi_noetherian = Cardinal::finite(2);
  std::vector<Mask> pi_base;  // the minimal nonempty opens
};
SpaceInvariants space_invariants(const FiniteSpace& X);

/// Every nonempty open contains a member of `family` (members nonempty opens).
bool is_pi_base(const FiniteSpace& X, const std::vector<Mask>& family);

/// Invariants of X against those of its regular-open poset. Equality is
/// only claimed (`asserted`) when X is pi-regular.
struct TranslationReport {
  SpacePredicates predicates;
  bool asserted = false;
  bool ro_separative = false;
  Cardinal space_souslin = Cardinal::finite(2);
  Cardinal ro_souslin = Cardinal::finite(2);
  Cardinal space_pi_noetherian = Cardinal::finite(2);
  Cardinal ro_pi_noetherian = Cardinal::finite(2);

  bool agree() const { return space_souslin == ro_souslin && space_pi_noetherian == ro_pi_noetherian; }
  /// Asserted but not equal.
  bool violated() const { return asserted && !agree(); }
};
TranslationReport check_translation(const FiniteSpace& X);

/// Every topology on n points (1..5), via preorders: the opens of each are
/// the sets closed downward under the specialization preorder. Points are
/// "0".."n-1".
std::vector<FiniteSpace> enumerate_topologies(std::size_t n);

struct SpaceFile {
  std::string name;
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> subbasis;
};

/// Line-oriented space text:
///
///     space sierpinski
///     points x y
///     subbasis x
///
/// One `subbasis` line per set, members comma-separated.
SpaceFile parse_space_text(std::string_view text);
FiniteSpace make_space(const SpaceFile& file);

}  // namespace bmlab

#endif  // BMLAB_TOPOLOGY_HPP
