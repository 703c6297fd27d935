#include "bmlab/poset_io.hpp"

#include <sstream>
#include <vector>

#include "text_util.hpp"

namespace bmlab {

PosetFile parse_poset_text(std::string_view text) {
  PosetFile out;
  bool have_header = false;
  std::size_t lineno = 0;
  for (const auto& line : detail::split_lines(text)) {
    ++lineno;
    const auto words = detail::split_words(detail::strip_comment(line));
    if (words.empty()) continue;
    const auto& kw = words[0];
    if (kw == "poset") {
      if (have_header) throw ParseError(lineno, "duplicate 'poset' line");
      if (words.size() != 2) throw ParseError(lineno, "expected 'poset <name>'");
      out.name = words[1];
      have_header = true;
    } else if (kw == "elements") {
      out.raw.elements.insert(out.raw.elements.end(), words.begin() + 1, words.end());
    } else if (kw == "leq") {
      if (words.size() != 3) throw ParseError(lineno, "expected 'leq <q> <p>'");
      out.raw.pairs.emplace_back(words[1], words[2]);
    } else if (kw == "closure") {
      if (words.size() != 1) throw ParseError(lineno, "'closure' takes no arguments");
      out.closure = true;
    } else {
      throw ParseError(lineno, "unknown directive '" + kw + "'");
    }
  }
  if (!have_header) throw ParseError(0, "missing 'poset <name>' line");
  return out;
}

std::string format_poset_text(const FinitePoset& P, std::string_view name) {
  std::ostringstream os;
  os << "poset " << name << "\nelements";
  for (const auto& id : P.ids()) os << ' ' << id;
  os << '\n';
  for (std::size_t p = 0; p < P.size(); ++p)
    for (std::size_t q : mask_indices(P.below(p)))
      if (q != p) os << "leq " << P.id(q) << ' ' << P.id(p) << '\n';
  return os.str();
}

}  // namespace bmlab
