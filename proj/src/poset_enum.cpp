#include "bmlab/poset_enum.hpp"

#include <string>

namespace bmlab {

namespace {

bool down_closed(std::span<const Mask> below, Mask set) {
  for (std::size_t d : mask_indices(set))
    if ((below[d] & ~set) != 0) return false;
  return true;
}

bool up_closed(std::span<const Mask> below, std::size_t k, Mask set) {
  // u in set and u <= x (x < k) must put x in set.
  for (std::size_t x = 0; x < k; ++x)
    if ((below[x] & set) != 0 && ((set >> x) & 1U) == 0) return false;
  return true;
}

void extend(std::vector<Mask>& below, std::size_t k, std::size_t n,
            const std::function<void(std::span<const Mask>)>& visit) {
  if (k == n) {
    visit(std::span<const Mask>(below.data(), n));
    return;
  }
  const std::span<const Mask> prefix(below.data(), k);
  const Mask universe = low_bits(k);
  for (Mask D = 0;; D = (D - universe) & universe) {
    if (down_closed(prefix, D)) {
      Mask allowed = 0;
      for (std::size_t u = 0; u < k; ++u)
        if (((D >> u) & 1U) == 0 && (below[u] & D) == D) allowed |= bit(u);
      // All submasks of `allowed`, including the empty one.
      for (Mask U = allowed;; U = (U - 1) & allowed) {
        if (up_closed(prefix, k, U)) {
          std::vector<Mask> saved(below.begin(), below.begin() + static_cast<std::ptrdiff_t>(k));
          below[k] = D | bit(k);
          for (std::size_t u : mask_indices(U)) below[u] |= bit(k);
          extend(below, k + 1, n, visit);
          std::copy(saved.begin(), saved.end(), below.begin());
        }
        if (U == 0) break;
      }
    }
    if (D == universe) break;
  }
}

}  // namespace

void for_each_labeled_poset(std::size_t n, const std::function<void(std::span<const Mask>)>& visit) {
  if (n < 1 || n > kMaxEnumeratedSize) throw Error("poset enumeration supports n in 1..6");
  std::vector<Mask> below(n, 0);
  extend(below, 0, n, visit);
}

FinitePoset poset_from_below(std::span<const Mask> below) {
  std::vector<std::string> ids;
  ids.reserve(below.size());
  for (std::size_t i = 0; i < below.size(); ++i) ids.push_back(std::to_string(i));
  return FinitePoset::from_below_sets(std::move(ids), std::vector<Mask>(below.begin(), below.end()));
}

std::vector<FinitePoset> enumerate_posets(std::size_t n) {
  std::vector<FinitePoset> out;
  for_each_labeled_poset(n, [&](std::span<const Mask> below) { out.push_back(poset_from_below(below)); });
  return out;
}

}  // namespace bmlab
