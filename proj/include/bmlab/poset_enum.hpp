#ifndef BMLAB_POSET_ENUM_HPP
#define BMLAB_POSET_ENUM_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "bmlab/poset.hpp"

namespace bmlab {

inline constexpr std::size_t kMaxEnumeratedSize = 6;

/// Visits every labeled partial order on {0..n-1} exactly once, as
/// below-sets. Element k is inserted with a down-closed set D of elements
/// beneath it and an up-closed set U above it, with every d in D already
/// below every u in U; restriction to {0..k-1} recovers the parent, so no
/// poset is reached twice. n must be in 1..6.
void for_each_labeled_poset(std::size_t n, const std::function<void(std::span<const Mask> below)>& visit);

/// All labeled posets on n elements with ids "0".."n-1".
std::vector<FinitePoset> enumerate_posets(std::size_t n);

FinitePoset poset_from_below(std::span<const Mask> below);

}  // namespace bmlab

#endif  // BMLAB_POSET_ENUM_HPP
