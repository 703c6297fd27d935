#include "bmlab/topology.hpp"

#include <algorithm>
#include <unordered_set>

#include "text_util.hpp"

namespace bmlab {

namespace {

void sort_lex(std::vector<Mask>& v) {
  std::sort(v.begin(), v.end(), lex_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Minimal open neighbourhood of each point.
std::vector<Mask> neighbourhoods(const FiniteSpace& X) {
  std::vector<Mask> nb(X.size(), X.full());
  for (Mask U : X.opens())
    for (std::size_t x : mask_indices(U)) nb[x] &= U;
  return nb;
}

SetPoset inclusion_poset(const FiniteSpace& X, std::vector<Mask> sets) {
  if (sets.size() > kMaxElements) throw Error("more than 64 sets; too large for the poset kernels");
  std::vector<std::string> ids;
  std::vector<Mask> below(sets.size(), 0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    ids.push_back(X.format(sets[i]));
    for (std::size_t j = 0; j < sets.size(); ++j)
      if ((sets[j] & ~sets[i]) == 0) below[i] |= bit(j);
  }
  return {FinitePoset::from_below_sets(std::move(ids), std::move(below)), std::move(sets)};
}

}  // namespace

FiniteSpace FiniteSpace::from_opens(std::vector<std::string> points, std::vector<Mask> opens) {
  if (points.empty()) throw Error("space has no points");
  if (points.size() > kMaxElements) throw Error("space exceeds 64 points");
  std::unordered_set<std::string> seen;
  for (const auto& p : points)
    if (!seen.insert(p).second) throw Error("duplicate point id '" + p + "'");
  FiniteSpace X;
  X.points_ = std::move(points);
  sort_lex(opens);
  const Mask full = X.full();
  for (Mask U : opens)
    if ((U & ~full) != 0) throw Error("open set mentions points outside the space");
  const std::unordered_set<Mask> index(opens.begin(), opens.end());
  if (!index.count(0)) throw Error("empty set is not open");
  if (!index.count(full)) throw Error("full set is not open");
  X.opens_ = std::move(opens);
  for (Mask U : X.opens_)
    for (Mask V : X.opens_) {
      if (!index.count(U | V)) throw Error("not closed under union: " + X.format(U) + " and " + X.format(V));
      if (!index.count(U & V)) throw Error("not closed under intersection: " + X.format(U) + " and " + X.format(V));
    }
  return X;
}

std::size_t FiniteSpace::require_point(std::string_view id) const {
  auto it = std::find(points_.begin(), points_.end(), id);
  if (it == points_.end()) throw Error("unknown point '" + std::string(id) + "'");
  return static_cast<std::size_t>(it - points_.begin());
}

bool FiniteSpace::is_open(Mask m) const { return std::binary_search(opens_.begin(), opens_.end(), m, lex_less); }

std::string FiniteSpace::format(Mask m) const {
  std::string s = "{";
  bool first = true;
  for (std::size_t i : mask_indices(m)) {
    if (!first) s += ",";
    s += points_.at(i);
    first = false;
  }
  return s + "}";
}

FiniteSpace generate_topology(std::vector<std::string> points, const std::vector<Mask>& subbasis) {
  const Mask full = low_bits(points.size());
  std::unordered_set<Mask> basis{full};
  for (Mask s : subbasis) {
    if ((s & ~full) != 0) throw Error("subbasis set mentions points outside the space");
    std::vector<Mask> add;
    for (Mask b : basis) add.push_back(b & s);
    basis.insert(add.begin(), add.end());
  }
  std::unordered_set<Mask> opens{0};
  for (Mask b : basis) {
    std::vector<Mask> add;
    for (Mask u : opens) add.push_back(u | b);
    opens.insert(add.begin(), add.end());
  }
  return FiniteSpace::from_opens(std::move(points), std::vector<Mask>(opens.begin(), opens.end()));
}

Mask interior(const FiniteSpace& X, Mask U) {
  Mask out = 0;
  for (Mask V : X.opens())
    if ((V & ~U) == 0) out |= V;
  return out;
}

Mask closure(const FiniteSpace& X, Mask U) {
  Mask outside = 0;
  for (Mask V : X.opens())
    if ((V & U) == 0) outside |= V;
  return X.full() & ~outside;
}

SetPoset regular_open_algebra(const FiniteSpace& X) {
  std::vector<Mask> sets;
  for (Mask U : X.opens())
    if (U != 0 && interior(X, closure(X, U)) == U) sets.push_back(U);
  return inclusion_poset(X, std::move(sets));
}

SetPoset open_set_poset(const FiniteSpace& X) {
  std::vector<Mask> sets;
  for (Mask U : X.opens())
    if (U != 0) sets.push_back(U);
  return inclusion_poset(X, std::move(sets));
}

SpacePredicates space_predicates(const FiniteSpace& X) {
  SpacePredicates r;
  const auto nb = neighbourhoods(X);
  for (std::size_t x = 0; x < X.size() && r.hausdorff; ++x)
    for (std::size_t y = x + 1; y < X.size(); ++y)
      if ((nb[x] & nb[y]) != 0) {
        r.hausdorff = false;
        r.hausdorff_witness = std::make_pair(x, y);
        break;
      }
  for (Mask U : X.opens()) {
    if (U == 0) continue;
    bool found = false;
    for (Mask V : X.opens())
      if (V != 0 && (closure(X, V) & ~U) == 0) {
        found = true;
        break;
      }
    if (!found) {
      r.pi_regular = false;
      r.refinement_witness = U;
      break;
    }
  }
  r.quasi_regular = r.hausdorff && r.pi_regular;
  return r;
}

bool is_cellular(const FiniteSpace& X, const std::vector<Mask>& family) {
  Mask seen = 0;
  for (Mask U : family) {
    if (U == 0 || !X.is_open(U) || (U & seen) != 0) return false;
    seen |= U;
  }
  return true;
}

std::vector<Mask> maximal_cellular(const FiniteSpace& X, const std::vector<Mask>& seed) {
  if (!is_cellular(X, seed)) throw Error("seed is not a cellular family");
  std::vector<Mask> out = seed;
  Mask used = 0;
  for (Mask U : seed) used |= U;
  while (closure(X, used) != X.full()) {
    for (Mask U : X.opens())
      if (U != 0 && (U & used) == 0) {
        out.push_back(U);
        used |= U;
        break;
      }
  }
  return out;
}

bool is_pi_base(const FiniteSpace& X, const std::vector<Mask>& family) {
  for (Mask B : family)
    if (B == 0 || !X.is_open(B)) return false;
  for (Mask U : X.opens()) {
    if (U == 0) continue;
    if (std::none_of(family.begin(), family.end(), [&](Mask B) { return (B & ~U) == 0; })) return false;
  }
  return true;
}

SpaceInvariants space_invariants(const FiniteSpace& X) {
  const auto O = open_set_poset(X);
  SpaceInvariants r;
  r.souslin = souslin_number(O.poset);
  const auto pnt = pi_noetherian_type(O.poset, false);
  r.pi_noetherian = pnt.value;
  for (std::size_t i : mask_indices(pnt.dense)) r.pi_base.push_back(O.sets[i]);
  if (!is_pi_base(X, r.pi_base)) throw Error("internal: minimal nonempty opens do not form a pi-base");
  return r;
}

TranslationReport check_translation(const FiniteSpace& X) {
  TranslationReport r;
  r.predicates = space_predicates(X);
  r.asserted = r.predicates.pi_regular;
  const auto inv = space_invariants(X);
  r.space_souslin = inv.souslin;
  r.space_pi_noetherian = inv.pi_noetherian;
  const auto ro = regular_open_algebra(X);
  r.ro_separative = is_separative(ro.poset).separative;
  r.ro_souslin = souslin_number(ro.poset);
  r.ro_pi_noetherian = pi_noetherian_type(ro.poset, false).value;
  return r;
}

std::vector<FiniteSpace> enumerate_topologies(std::size_t n) {
  if (n < 1 || n > 5) throw Error("topology enumeration supports 1..5 points");
  std::vector<std::pair<std::size_t, std::size_t>> offdiag;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) offdiag.emplace_back(i, j);
  std::vector<std::string> points;
  for (std::size_t i = 0; i < n; ++i) points.push_back(std::to_string(i));

  std::vector<FiniteSpace> out;
  std::vector<Mask> le(n);
  const std::uint64_t total = std::uint64_t{1} << offdiag.size();
  for (std::uint64_t code = 0; code < total; ++code) {
    for (std::size_t i = 0; i < n; ++i) le[i] = bit(i);
    for (std::size_t b = 0; b < offdiag.size(); ++b)
      if ((code >> b) & 1U) le[offdiag[b].second] |= bit(offdiag[b].first);  // first <= second
    bool transitive = true;
    for (std::size_t x = 0; x < n && transitive; ++x)
      for (std::size_t y : mask_indices(le[x]))
        if ((le[y] & ~le[x]) != 0) {
          transitive = false;
          break;
        }
    if (!transitive) continue;
    std::vector<Mask> opens;
    for (Mask U = 0; U <= low_bits(n); ++U) {
      bool down = true;
      for (std::size_t x : mask_indices(U)) down = down && (le[x] & ~U) == 0;
      if (down) opens.push_back(U);
    }
    out.push_back(FiniteSpace::from_opens(points, std::move(opens)));
  }
  return out;
}

SpaceFile parse_space_text(std::string_view text) {
  SpaceFile out;
  bool have_header = false;
  std::size_t lineno = 0;
  for (const auto& line : detail::split_lines(text)) {
    ++lineno;
    const auto stripped = detail::strip_comment(line);
    const auto words = detail::split_words(stripped);
    if (words.empty()) continue;
    const auto& kw = words[0];
    if (kw == "space") {
      if (have_header) throw ParseError(lineno, "duplicate 'space' line");
      if (words.size() != 2) throw ParseError(lineno, "expected 'space <name>'");
      out.name = words[1];
      have_header = true;
    } else if (kw == "points") {
      out.points.insert(out.points.end(), words.begin() + 1, words.end());
    } else if (kw == "subbasis") {
      std::string joined;
      for (std::size_t i = 1; i < words.size(); ++i) joined += words[i];
      std::vector<std::string> members;
      std::size_t start = 0;
      while (start < joined.size()) {
        auto comma = joined.find(',', start);
        if (comma == std::string::npos) comma = joined.size();
        if (comma == start) throw ParseError(lineno, "empty member in subbasis set");
        members.push_back(joined.substr(start, comma - start));
        start = comma + 1;
      }
      if (!joined.empty() && joined.back() == ',') throw ParseError(lineno, "trailing ',' in subbasis set");
      out.subbasis.push_back(std::move(members));
    } else {
      throw ParseError(lineno, "unknown directive '" + kw + "'");
    }
  }
  if (!have_header) throw ParseError(0, "missing 'space <name>' line");
  return out;
}

FiniteSpace make_space(const SpaceFile& file) {
  std::vector<Mask> subbasis;
  if (file.points.size() > kMaxElements) throw Error("space exceeds 64 points");
  for (const auto& set : file.subbasis) {
    Mask m = 0;
    for (const auto& id : set) {
      auto it = std::find(file.points.begin(), file.points.end(), id);
      if (it == file.points.end()) throw Error("unknown point '" + id + "' in subbasis");
      m |= bit(static_cast<std::size_t>(it - file.points.begin()));
    }
    subbasis.push_back(m);
  }
  return generate_topology(file.points, subbasis);
}

}  // namespace bmlab
