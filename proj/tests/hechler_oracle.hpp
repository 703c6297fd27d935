#ifndef BMLAB_TESTS_HECHLER_ORACLE_HPP
#define BMLAB_TESTS_HECHLER_ORACLE_HPP

// Pointwise and bounded-search oracles for the Hechler order. Every check
// evaluates functions value by value up to a fixed horizon, which is exact
// for the small parameters the generators produce (crossings stay far below it).

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "bmlab/hechler.hpp"

namespace bmlab::oracle {

inline constexpr std::uint64_t eval_horizon = 10000;

inline unsigned __int128 eval(const EvFun& f, std::uint64_t n) {
  const auto it = f.exceptions().find(n);
  if (it != f.exceptions().end()) return it->second;
  return static_cast<unsigned __int128>(f.slope()) * n + f.intercept();
}

inline bool leq_from(const EvFun& f, const EvFun& g, std::uint64_t from) {
  for (std::uint64_t n = from; n <= eval_horizon; ++n)
    if (eval(f, n) > eval(g, n)) return false;
  return true;
}

inline bool leq_star(const EvFun& f, const EvFun& g) { return leq_from(f, g, eval_horizon / 2); }

inline bool hechler_leq(const HechlerCond& lower, const HechlerCond& upper) {
  const auto& t = lower.stem;
  const auto& s = upper.stem;
  if (t.size() < s.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (t[i] != s[i]) return false;
  for (std::size_t n = s.size(); n < t.size(); ++n)
    if (t[n] < eval(upper.side, n)) return false;
  return leq_from(upper.side, lower.side, t.size());
}

/// Is there a stem u (length <= 4, entries <= 16) carrying a common
/// extension? A side function can always be taken large enough, so only the
/// stem bullets matter.
inline bool compatible_by_search(const HechlerCond& a, const HechlerCond& b) {
  constexpr std::size_t max_len = 4;
  constexpr std::uint64_t max_val = 16;
  std::vector<std::uint64_t> u;
  auto ok_against = [&](const HechlerCond& c) {
    if (u.size() < c.stem.size()) return false;
    for (std::size_t i = 0; i < c.stem.size(); ++i)
      if (u[i] != c.stem[i]) return false;
    for (std::size_t n = c.stem.size(); n < u.size(); ++n)
      if (u[n] < eval(c.side, n)) return false;
    return true;
  };
  auto search = [&](auto&& self) -> bool {
    if (ok_against(a) && ok_against(b)) return true;
    if (u.size() == max_len) return false;
    for (std::uint64_t v = 0; v <= max_val; ++v) {
      u.push_back(v);
      const bool found = self(self);
      u.pop_back();
      if (found) return true;
    }
    return false;
  };
  return search(search);
}

/// Small canonical side function: slope <= 3, intercept <= 12, up to three
/// listed points below 8 with values <= 20.
inline EvFun random_evfun(std::mt19937_64& rng) {
  std::map<std::uint64_t, std::uint64_t> ex;
  const int k = static_cast<int>(rng() % 4);
  for (int i = 0; i < k; ++i) ex[rng() % 8] = rng() % 21;
  return EvFun(std::move(ex), rng() % 4, rng() % 13);
}

inline HechlerCond random_cond(std::mt19937_64& rng, std::size_t max_stem = 3, std::uint64_t max_val = 6) {
  HechlerCond c;
  const std::size_t len = rng() % (max_stem + 1);
  for (std::size_t i = 0; i < len; ++i) c.stem.push_back(rng() % (max_val + 1));
  c.side = random_evfun(rng);
  return c;
}

/// A condition below c: the stem grows by entries on or above c's side and
/// the new side is c's side plus a random non-negative function.
inline HechlerCond random_extension(std::mt19937_64& rng, const HechlerCond& c) {
  HechlerCond d = c;
  const std::size_t extra = rng() % 3;
  for (std::size_t i = 0; i < extra; ++i) {
    const auto n = d.stem.size();
    d.stem.push_back(static_cast<std::uint64_t>(eval(c.side, n)) + rng() % 3);
  }
  const EvFun bump = random_evfun(rng);
  std::map<std::uint64_t, std::uint64_t> ex;
  for (const auto* h : {&c.side, &bump})
    for (const auto& kv : h->exceptions())
      ex[kv.first] = static_cast<std::uint64_t>(eval(c.side, kv.first) + eval(bump, kv.first));
  // Below the new stem the side is unconstrained, so scramble it.
  for (std::uint64_t n = 0; n < d.stem.size(); ++n)
    if (rng() % 2) ex[n] = rng() % 5;
  d.side = EvFun(std::move(ex), c.side.slope() + bump.slope(), c.side.intercept() + bump.intercept());
  return d;
}

}  // namespace bmlab::oracle

#endif  // BMLAB_TESTS_HECHLER_ORACLE_HPP
