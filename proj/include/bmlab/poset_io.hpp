#ifndef BMLAB_POSET_IO_HPP
#define BMLAB_POSET_IO_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "bmlab/poset.hpp"

namespace bmlab {

struct PosetFile {
  std::string name;
  RawPoset raw;
  bool closure = false;
};

/// Line-oriented poset text:
///
///     poset diamond
///     elements a b t
///     leq a t        # a extends t
///     closure
///
/// Blank lines and '#' comments are ignored. `elements` may repeat.
PosetFile parse_poset_text(std::string_view text);

/// Renders a poset back to the text format (all pairs, no closure line).
std::string format_poset_text(const FinitePoset& P, std::string_view name);

}  // namespace bmlab

#endif  // BMLAB_POSET_IO_HPP
