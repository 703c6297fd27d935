#ifndef BMLAB_TESTS_SUPPORT_HPP
#define BMLAB_TESTS_SUPPORT_HPP

// Test-only generators and brute-force oracles. Nothing here calls the
// search routines it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "bmlab/poset.hpp"
#include "bmlab/topology.hpp"

namespace bmlab::testing {

inline FinitePoset poset(std::vector<std::string> ids, std::vector<std::pair<std::string, std::string>> pairs) {
  return make_poset(RawPoset{std::move(ids), std::move(pairs)}, true);
}

/// c0 <= c1 <= ... (c0 is the bottom, it extends everything).
inline FinitePoset chain(std::size_t n, const std::string& prefix = "c") {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(prefix + std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(ids[i], ids[i + 1]);
  return poset(ids, pairs);
}

/// k disjoint chains of length m; ids "k<i>_<j>".
inline FinitePoset disjoint_chains(std::size_t k, std::size_t m) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      ids.push_back("k" + std::to_string(i) + "_" + std::to_string(j));
      if (j > 0) pairs.emplace_back(ids[ids.size() - 2], ids.back());
    }
  return poset(ids, pairs);
}

/// {a, b <= t}.
inline FinitePoset vee() { return poset({"a", "b", "t"}, {{"a", "t"}, {"b", "t"}}); }

/// {bot <= a, b <= t}.
inline FinitePoset diamond() {
  return poset({"bot", "a", "b", "t"}, {{"bot", "a"}, {"bot", "b"}, {"a", "t"}, {"b", "t"}});
}

// ---- naive predicates, straight from the definitions ----

inline bool naive_leq(const FinitePoset& P, std::size_t q, std::size_t p) { return P.leq(q, p); }

inline bool naive_compatible(const FinitePoset& P, std::size_t p, std::size_t q) {
  for (std::size_t r = 0; r < P.size(); ++r)
    if (naive_leq(P, r, p) && naive_leq(P, r, q)) return true;
  return false;
}

inline bool naive_is_antichain(const FinitePoset& P, Mask m) {
  for (std::size_t a = 0; a < P.size(); ++a)
    for (std::size_t b = a + 1; b < P.size(); ++b)
      if (((m >> a) & 1U) && ((m >> b) & 1U) && naive_compatible(P, a, b)) return false;
  return true;
}

/// Largest antichain by enumerating all 2^n subsets.
inline int naive_max_antichain_size(const FinitePoset& P) {
  int best = 0;
  for (Mask m = 0; m < (Mask{1} << P.size()); ++m)
    if (std::popcount(m) > best && naive_is_antichain(P, m)) best = std::popcount(m);
  return best;
}

inline Mask naive_down_set(const FinitePoset& P, const std::vector<std::size_t>& Q) {
  Mask out = 0;
  for (std::size_t p = 0; p < P.size(); ++p) {
    bool all = true;
    for (std::size_t q : Q) all = all && naive_leq(P, p, q);
    if (all) out |= bit(p);
  }
  return out;
}

inline bool naive_is_dense(const FinitePoset& P, Mask D) {
  for (std::size_t p = 0; p < P.size(); ++p) {
    bool found = false;
    for (std::size_t q = 0; q < P.size(); ++q) found = found || (((D >> q) & 1U) && naive_leq(P, q, p));
    if (!found) return false;
  }
  return true;
}

inline bool naive_is_separative(const FinitePoset& P) {
  for (std::size_t p = 0; p < P.size(); ++p)
    for (std::size_t q = 0; q < P.size(); ++q) {
      if (naive_leq(P, q, p)) continue;
      bool found = false;
      for (std::size_t r = 0; r < P.size(); ++r) found = found || (naive_leq(P, r, q) && !naive_compatible(P, r, p));
      if (!found) return false;
    }
  return true;
}

/// Counts labeled partial orders on n points by testing every relation.
inline std::size_t brute_force_poset_count(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> offdiag;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) offdiag.emplace_back(i, j);
  std::size_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << offdiag.size();
  std::vector<std::vector<bool>> R(n, std::vector<bool>(n));
  for (std::uint64_t code = 0; code < total; ++code) {
    for (std::size_t i = 0; i < n; ++i) std::fill(R[i].begin(), R[i].end(), false);
    for (std::size_t i = 0; i < n; ++i) R[i][i] = true;
    for (std::size_t b = 0; b < offdiag.size(); ++b)
      if ((code >> b) & 1U) R[offdiag[b].first][offdiag[b].second] = true;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && R[i][j] && R[j][i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (R[i][j] && R[j][k] && !R[i][k]) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

// ---- random generators ----

/// Random order: i < j gets an edge j <= i... with probability `density`,
/// then transitive closure; labels are shuffled.
inline FinitePoset random_poset(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution edge(density);
  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  RawPoset raw;
  for (std::size_t i = 0; i < n; ++i) raw.elements.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) raw.pairs.emplace_back(raw.elements[label[j]], raw.elements[label[i]]);
  return make_poset(raw, true);
}

/// Nonempty subsets of an m-atom set, ordered by inclusion, containing every
/// singleton: such posets are separative. Labels are shuffled.
inline FinitePoset random_separative_poset(std::mt19937_64& rng, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> atoms_dist(1, 4);
  std::size_t m = atoms_dist(rng);
  while (m > max_n) --m;
  std::vector<Mask> sets;
  for (std::size_t a = 0; a < m; ++a) sets.push_back(bit(a));
  std::vector<Mask> extra;
  for (Mask s = 1; s < (Mask{1} << m); ++s)
    if (std::popcount(s) >= 2) extra.push_back(s);
  std::shuffle(extra.begin(), extra.end(), rng);
  const std::size_t room = std::min(extra.size(), max_n - m);
  std::uniform_int_distribution<std::size_t> take(0, room);
  const std::size_t k = take(rng);
  sets.insert(sets.end(), extra.begin(), extra.begin() + static_cast<std::ptrdiff_t>(k));
  std::shuffle(sets.begin(), sets.end(), rng);
  RawPoset raw;
  for (std::size_t i = 0; i < sets.size(); ++i) raw.elements.push_back("s" + std::to_string(i));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && (sets[i] & ~sets[j]) == 0) raw.pairs.emplace_back(raw.elements[i], raw.elements[j]);
  return make_poset(raw, false);
}

// Pointwise definitions, independent of the library formulas.
inline Mask naive_closure(const FiniteSpace& X, Mask U) {
  Mask out = 0;
  for (std::size_t x = 0; x < X.size(); ++x) {
    bool meets_all = true;
    for (Mask V : X.opens())
      if (((V >> x) & 1U) && (V & U) == 0) meets_all = false;
    if (meets_all) out |= bit(x);
  }
  return out;
}

inline Mask naive_interior(const FiniteSpace& X, Mask U) {
  Mask out = 0;
  for (std::size_t x = 0; x < X.size(); ++x)
    for (Mask V : X.opens())
      if (((V >> x) & 1U) && (V & ~U) == 0) out |= bit(x);
  return out;
}

inline bool naive_pi_regular(const FiniteSpace& X) {
  for (Mask U : X.opens()) {
    if (U == 0) continue;
    bool ok = false;
    for (Mask V : X.opens()) ok = ok || (V != 0 && (naive_closure(X, V) & ~U) == 0);
    if (!ok) return false;
  }
  return true;
}

inline int naive_max_cellular(const FiniteSpace& X) {
  std::vector<Mask> ne;
  for (Mask U : X.opens())
    if (U) ne.push_back(U);
  int best = 0;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << ne.size()); ++pick) {
    Mask used = 0;
    bool ok = true;
    for (std::size_t i = 0; i < ne.size() && ok; ++i)
      if ((pick >> i) & 1U) {
        ok = (ne[i] & used) == 0;
        used |= ne[i];
      }
    if (ok) best = std::max(best, std::popcount(pick));
  }
  return best;
}

}  // namespace bmlab::testing

#endif  // BMLAB_TESTS_SUPPORT_HPP
