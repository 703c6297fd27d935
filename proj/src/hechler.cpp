#include "bmlab/hechler.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>

#include "text_util.hpp"

namespace bmlab {

namespace {

constexpr u128 u64_max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t parse_u64(std::string_view s, const char* what) {
  s = detail::trim(s);
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size())
    throw ParseError(0, std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

// Smallest n >= 0 with lo(n) >= hi(n), given lo's slope is strictly larger.
u128 catch_up_point(std::uint64_t a_lo, std::uint64_t c_lo, std::uint64_t a_hi, std::uint64_t c_hi) {
  if (c_lo >= c_hi) return 0;
  const u128 gap = u128(c_hi) - c_lo;
  const u128 rate = u128(a_lo) - a_hi;
  return (gap + rate - 1) / rate;
}

}  // namespace

EvFun::EvFun(std::map<std::uint64_t, std::uint64_t> exceptions, std::uint64_t slope, std::uint64_t intercept)
    : exceptions_(std::move(exceptions)), slope_(slope), intercept_(intercept) {
  std::erase_if(exceptions_, [this](const auto& kv) { return u128(kv.second) == tail(kv.first); });
}

u128 EvFun::operator()(std::uint64_t n) const {
  const auto it = exceptions_.find(n);
  return it == exceptions_.end() ? tail(n) : u128(it->second);
}

std::uint64_t EvFun::tail_start() const { return exceptions_.empty() ? 0 : exceptions_.rbegin()->first + 1; }

std::string EvFun::to_string() const {
  std::string t;
  if (slope_ == 0) {
    t = std::to_string(intercept_);
  } else {
    t = slope_ == 1 ? "n" : std::to_string(slope_) + "n";
    if (intercept_ > 0) t += "+" + std::to_string(intercept_);
  }
  if (exceptions_.empty()) return t;
  std::string s = "{";
  for (const auto& [k, v] : exceptions_) {
    if (s.size() > 1) s += ",";
    s += std::to_string(k) + ":" + std::to_string(v);
  }
  return s + "} + " + t;
}

bool ev_leq_star(const EvFun& f, const EvFun& g) {
  return f.slope() != g.slope() ? f.slope() < g.slope() : f.intercept() <= g.intercept();
}

bool ev_leq_from(const EvFun& f, const EvFun& g, std::uint64_t from) {
  std::set<std::uint64_t> listed;
  for (const auto* h : {&f, &g})
    for (const auto& kv : h->exceptions())
      if (kv.first >= from) listed.insert(kv.first);
  for (auto n : listed)
    if (f(n) > g(n)) return false;

  // Off the listed points both are affine; the tails may disagree only on
  // an initial stretch, and every point of it must be listed.
  if (!ev_leq_star(f, g)) return false;
  if (f.slope() == g.slope()) return true;
  const u128 ok_from = catch_up_point(g.slope(), g.intercept(), f.slope(), f.intercept());
  if (ok_from <= from) return true;
  if (ok_from - from > listed.size()) return false;
  for (std::uint64_t n = from; n < ok_from; ++n)
    if (!listed.count(n)) return false;
  return true;
}

EvFun ev_max(const EvFun& f, const EvFun& g) {
  const EvFun& top = ev_leq_star(f, g) ? g : f;
  const EvFun& other = &top == &g ? f : g;

  std::set<std::uint64_t> points;
  for (const auto* h : {&f, &g})
    for (const auto& kv : h->exceptions()) points.insert(kv.first);
  if (top.slope() > other.slope()) {
    const u128 end = catch_up_point(top.slope(), top.intercept(), other.slope(), other.intercept());
    if (end > max_max_exceptions) throw Error("pointwise max needs too many listed points");
    for (std::uint64_t n = 0; n < end; ++n) points.insert(n);
  }
  if (points.size() > max_max_exceptions) throw Error("pointwise max needs too many listed points");

  std::map<std::uint64_t, std::uint64_t> ex;
  for (auto n : points) {
    const u128 v = std::max(f(n), g(n));
    if (v == top.tail(n)) continue;
    if (v > u64_max) throw Error("pointwise max value exceeds 64 bits at n=" + std::to_string(n));
    ex.emplace(n, static_cast<std::uint64_t>(v));
  }
  return EvFun(std::move(ex), top.slope(), top.intercept());
}

Stem concat(const Stem& s, const Stem& t) {
  Stem out = s;
  out.insert(out.end(), t.begin(), t.end());
  return out;
}

bool extends(const Stem& t, const Stem& s) {
  return t.size() >= s.size() && std::equal(s.begin(), s.end(), t.begin());
}

bool hechler_leq(const HechlerCond& lower, const HechlerCond& upper) {
  const auto& [t, g] = lower;
  const auto& [s, f] = upper;
  if (!extends(t, s)) return false;
  if (!ev_leq_from(f, g, t.size())) return false;
  for (std::size_t n = s.size(); n < t.size(); ++n)
    if (u128(t[n]) < f(n)) return false;
  return true;
}

Compatibility hechler_compatible(const HechlerCond& a, const HechlerCond& b) {
  const HechlerCond& longer = a.stem.size() >= b.stem.size() ? a : b;
  const HechlerCond& shorter = &longer == &a ? b : a;
  if (!extends(longer.stem, shorter.stem)) return {};
  for (std::size_t n = shorter.stem.size(); n < longer.stem.size(); ++n)
    if (u128(longer.stem[n]) < shorter.side(n)) return {};
  return {true, HechlerCond{longer.stem, ev_max(a.side, b.side)}};
}

EvFun parse_evfun(std::string_view text) {
  text = detail::trim(text);
  std::map<std::uint64_t, std::uint64_t> ex;
  if (!text.empty() && text.front() == '{') {
    const auto close = text.find('}');
    if (close == std::string_view::npos) throw ParseError(0, "unclosed exception map");
    auto body = detail::trim(text.substr(1, close - 1));
    while (!body.empty()) {
      const auto comma = body.find(',');
      const auto entry = body.substr(0, comma);
      const auto colon = entry.find(':');
      if (colon == std::string_view::npos) throw ParseError(0, "exception entry needs 'n:value'");
      const auto key = parse_u64(entry.substr(0, colon), "exception key");
      if (!ex.emplace(key, parse_u64(entry.substr(colon + 1), "exception value")).second)
        throw ParseError(0, "exception key " + std::to_string(key) + " listed twice");
      if (comma == std::string_view::npos) break;
      body = body.substr(comma + 1);
    }
    text = detail::trim(text.substr(close + 1));
    if (text.empty()) return EvFun(std::move(ex), 0, 0);
    if (text.front() != '+') throw ParseError(0, "expected '+' before the affine tail");
    text = detail::trim(text.substr(1));
  }
  if (text.empty()) throw ParseError(0, "missing affine tail");
  u128 a = 0, c = 0;
  std::size_t start = 0;
  while (true) {
    const auto plus = text.find('+', start);
    auto term = detail::trim(text.substr(start, plus == std::string_view::npos ? text.npos : plus - start));
    if (!term.empty() && term.back() == 'n') {
      term = detail::trim(term.substr(0, term.size() - 1));
      if (!term.empty() && term.back() == '*') term = detail::trim(term.substr(0, term.size() - 1));
      a += term.empty() ? 1 : parse_u64(term, "slope");
    } else {
      c += parse_u64(term, "constant");
    }
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  if (a > u64_max || c > u64_max) throw ParseError(0, "affine tail exceeds 64 bits");
  return EvFun(std::move(ex), static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(c));
}

HechlerCond parse_hechler(std::string_view text) {
  text = detail::trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw ParseError(0, "condition must look like ([s...], f)");
  text = detail::trim(text.substr(1, text.size() - 2));
  if (text.empty() || text.front() != '[') throw ParseError(0, "condition must start with a stem [..]");
  const auto close = text.find(']');
  if (close == std::string_view::npos) throw ParseError(0, "unclosed stem");
  HechlerCond c;
  const auto body = detail::trim(text.substr(1, close - 1));
  if (!body.empty()) {
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      c.stem.push_back(parse_u64(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start),
                                 "stem entry"));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  auto rest = detail::trim(text.substr(close + 1));
  if (rest.empty() || rest.front() != ',') throw ParseError(0, "expected ',' after the stem");
  c.side = parse_evfun(rest.substr(1));
  return c;
}

std::string format_stem(const Stem& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

std::string format_hechler(const HechlerCond& c) { return "(" + format_stem(c.stem) + ", " + c.side.to_string() + ")"; }

}  // namespace bmlab
