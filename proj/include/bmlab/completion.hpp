#ifndef BMLAB_COMPLETION_HPP
#define BMLAB_COMPLETION_HPP

#include <cstddef>
#include <vector>

#include "bmlab/poset.hpp"
#include "bmlab/topology.hpp"

namespace bmlab {

/// The completion of a separative poset: regular opens of its down-set
/// topology minus the empty set, with p sent to int(cl(p-down)).
struct Completion {
  FiniteSpace space;          // points are the poset's elements
  SetPoset algebra;           // RO minus the empty set
  std::vector<std::size_t> embedding;  // element -> index into algebra
};

/// Throws Error if P is not separative (the map need not be injective then).
Completion boolean_completion(const FinitePoset& P);

}  // namespace bmlab

#endif  // BMLAB_COMPLETION_HPP
