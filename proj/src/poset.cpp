#include "bmlab/poset.hpp"

#include <algorithm>
#include <unordered_map>

#include "bmlab/kernels.hpp"

namespace bmlab {

std::vector<std::size_t> mask_indices(Mask m) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

bool lex_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

FinitePoset FinitePoset::from_below_sets(std::vector<std::string> ids, std::vector<Mask> below) {
  if (ids.size() != below.size()) throw Error("id list and relation size differ");
  if (ids.size() > kMaxElements) throw Error("poset exceeds 64 elements");
  FinitePoset P;
  P.ids_ = std::move(ids);
  P.below_ = std::move(below);
  P.above_.assign(P.ids_.size(), 0);
  for (std::size_t p = 0; p < P.size(); ++p)
    for (std::size_t q : mask_indices(P.below_[p])) P.above_[q] |= bit(p);
  return P;
}

std::optional<std::size_t> FinitePoset::index_of(std::string_view id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t FinitePoset::require_index(std::string_view id) const {
  if (auto i = index_of(id)) return *i;
  throw Error("unknown element id '" + std::string(id) + "'");
}

Mask FinitePoset::minimal_elements() const {
  Mask out = 0;
  for (std::size_t p = 0; p < size(); ++p)
    if (below_[p] == bit(p)) out |= bit(p);
  return out;
}

std::string FinitePoset::format(Mask m) const {
  std::string s = "{";
  bool first = true;
  for (std::size_t i : mask_indices(m)) {
    if (!first) s += ",";
    s += ids_.at(i);
    first = false;
  }
  return s + "}";
}

std::string PosetViolation::message() const {
  switch (kind) {
    case Kind::Empty: return "empty element list";
    case Kind::TooLarge: return "more than 64 elements";
    case Kind::DuplicateId: return "duplicate element id '" + first + "'";
    case Kind::UnknownId: return "unknown element id '" + first + "'";
    case Kind::Antisymmetry: return "antisymmetry violated: " + first + " <= " + second + " and " + second + " <= " + first;
    case Kind::Transitivity: return "transitivity violated: missing " + first + " <= " + second;
  }
  return "invalid poset";
}

PosetOrViolation validate_poset(const RawPoset& raw, bool closure) {
  using K = PosetViolation::Kind;
  const std::size_t n = raw.elements.size();
  if (n == 0) return PosetViolation{K::Empty, {}, {}};
  if (n > kMaxElements) return PosetViolation{K::TooLarge, {}, {}};

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(raw.elements[i], i).second) return PosetViolation{K::DuplicateId, raw.elements[i], {}};

  std::vector<Mask> below(n, 0);
  for (std::size_t i = 0; i < n; ++i) below[i] = bit(i);
  for (const auto& [q, p] : raw.pairs) {
    auto qi = index.find(q);
    if (qi == index.end()) return PosetViolation{K::UnknownId, q, {}};
    auto pi = index.find(p);
    if (pi == index.end()) return PosetViolation{K::UnknownId, p, {}};
    below[pi->second] |= bit(qi->second);
  }

  if (closure) {
    // Warshall on bit rows: if k <= p then everything below k is below p.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t p = 0; p < n; ++p)
        if ((below[p] >> k) & 1U) below[p] |= below[k];
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (((below[b] >> a) & 1U) && ((below[a] >> b) & 1U))
        return PosetViolation{K::Antisymmetry, raw.elements[a], raw.elements[b]};

  // First (a, c) in index order with a <= b <= c but not a <= c.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      if ((below[c] >> a) & 1U) continue;
      for (std::size_t b : mask_indices(below[c]))
        if ((below[b] >> a) & 1U) return PosetViolation{K::Transitivity, raw.elements[a], raw.elements[c]};
    }
  }
  return FinitePoset::from_below_sets(raw.elements, std::move(below));
}

FinitePoset make_poset(const RawPoset& raw, bool closure) {
  auto result = validate_poset(raw, closure);
  if (auto* v = std::get_if<PosetViolation>(&result)) throw Error(v->message());
  return std::get<FinitePoset>(std::move(result));
}

std::optional<std::size_t> compatibility_witness(const FinitePoset& P, std::size_t p, std::size_t q) {
  const Mask common = P.below(p) & P.below(q);
  if (common == 0) return std::nullopt;
  return static_cast<std::size_t>(std::countr_zero(common));
}

Mask incompatible_with(const FinitePoset& P, std::size_t p) {
  Mask out = 0;
  for (std::size_t r = 0; r < P.size(); ++r)
    if ((P.below(r) & P.below(p)) == 0) out |= bit(r);
  return out;
}

SeparativityResult is_separative(const FinitePoset& P) {
  for (std::size_t p = 0; p < P.size(); ++p) {
    const Mask incompat = incompatible_with(P, p);
    for (std::size_t q = 0; q < P.size(); ++q) {
      if (P.leq(q, p)) continue;
      if ((P.below(q) & incompat) == 0) return {false, std::make_pair(p, q)};
    }
  }
  return {};
}

namespace {

// Max clique in the incompatibility graph. Candidates are explored in index
// order, include-first, so the first maximum found is lexicographically least.
class AntichainSearch {
 public:
  explicit AntichainSearch(const FinitePoset& P) : incompat_(P.size()) {
    for (std::size_t p = 0; p < P.size(); ++p) incompat_[p] = incompatible_with(P, p);
  }

  Mask run(Mask candidates) {
    expand(0, candidates);
    return best_;
  }

 private:
  void expand(Mask chosen, Mask candidates) {
    const int size = popcount(chosen);
    if (size > best_size_) {
      best_ = chosen;
      best_size_ = size;
    }
    while (candidates != 0) {
      if (size + popcount(candidates) <= best_size_) return;
      const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      expand(chosen | bit(v), candidates & incompat_[v]);
    }
  }

  std::vector<Mask> incompat_;
  Mask best_ = 0;
  int best_size_ = -1;
};

}  // namespace

Mask max_antichain(const FinitePoset& P) { return AntichainSearch(P).run(P.all()); }

Cardinal souslin_number(const FinitePoset& P) {
  if (P.size() == 0) throw Error("empty poset");
  return Cardinal::finite(static_cast<std::uint64_t>(popcount(max_antichain(P))) + 1);
}

std::optional<std::size_t> density_gap(const FinitePoset& P, Mask D) {
  for (std::size_t p = 0; p < P.size(); ++p)
    if ((P.below(p) & D) == 0) return p;
  return std::nullopt;
}

Cardinal noetherian_type(const FinitePoset& P, Mask D) {
  if (P.size() == 0) throw Error("empty poset");
  if (auto gap = density_gap(P, D)) throw Error("subset is not dense: " + P.id(*gap) + " has no extension in it");
  int fiber = 0;
  for (std::size_t q = 0; q < P.size(); ++q) fiber = std::max(fiber, popcount(P.above(q) & D));
  return Cardinal::finite(static_cast<std::uint64_t>(fiber) + 1);
}

PiNoetherianResult pi_noetherian_type(const FinitePoset& P, bool exhaustive) {
  if (P.size() == 0) throw Error("empty poset");
  PiNoetherianResult result;
  result.dense = P.minimal_elements();
  result.value = noetherian_type(P, result.dense);
  if (exhaustive) {
    if (P.size() > kExhaustiveLimit) throw Error("exhaustive dense-subset scan refuses posets above 20 elements");
    const auto scan = exhaustive_min_noetherian(P);
    if (scan.value != result.value)
      throw Error("exhaustive scan disagrees: minimum nt " + scan.value.to_string() + " vs " + result.value.to_string());
    result.exhaustively_verified = true;
  }
  return result;
}

Mask down_set(const FinitePoset& P, Mask Q) {
  Mask out = P.all();
  for (std::size_t q : mask_indices(Q)) out &= P.below(q);
  return out;
}

std::vector<std::size_t> reduce_down_set(const FinitePoset& P, std::span<const std::size_t> Q) {
  std::vector<std::size_t> kept;
  Mask running = P.all();
  for (std::size_t q : Q) {
    const Mask next = running & P.below(q);
    if (next != running) {
      kept.push_back(q);
      running = next;
    }
  }
  return kept;
}

Mask enumeration_dense(const FinitePoset& P, std::span<const std::size_t> order) {
  if (order.size() != P.size()) throw Error("enumeration is not a permutation of the poset");
  Mask seen = 0;
  for (std::size_t i : order) {
    if (i >= P.size() || ((seen >> i) & 1U)) throw Error("enumeration is not a permutation of the poset");
    seen |= bit(i);
  }
  Mask dense = 0;
  Mask earlier = 0;
  for (std::size_t a : order) {
    if ((P.below(a) & earlier) == 0) dense |= bit(a);
    earlier |= bit(a);
  }
  return dense;
}

NablaVerdict check_nabla(const FinitePoset& P) {
  NablaVerdict v;
  v.pi_noetherian = pi_noetherian_type(P, false).value;
  v.souslin = souslin_number(P);
  v.holds = v.pi_noetherian <= v.souslin;
  return v;
}

}  // namespace bmlab
