#include "bmlab/completion.hpp"

#include <algorithm>

namespace bmlab {

Completion boolean_completion(const FinitePoset& P) {
  if (const auto sep = is_separative(P); !sep.separative)
    throw Error("poset is not separative: " + P.id(sep.counterexample->second) + " is not below " +
                P.id(sep.counterexample->first) + " yet every extension of it is compatible with " +
                P.id(sep.counterexample->first));
  std::vector<Mask> subbasis;
  for (std::size_t p = 0; p < P.size(); ++p) subbasis.push_back(P.below(p));
  auto space = generate_topology(P.ids(), subbasis);
  auto algebra = regular_open_algebra(space);
  std::vector<std::size_t> embedding;
  for (std::size_t p = 0; p < P.size(); ++p) {
    const Mask image = interior(space, closure(space, P.below(p)));
    const auto it = std::find(algebra.sets.begin(), algebra.sets.end(), image);
    if (it == algebra.sets.end()) throw Error("internal: image of " + P.id(p) + " is not regular open");
    embedding.push_back(static_cast<std::size_t>(it - algebra.sets.begin()));
  }
  return {std::move(space), std::move(algebra), std::move(embedding)};
}

}  // namespace bmlab
