#include "bmlab/regions.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "text_util.hpp"

namespace bmlab {

namespace {

BigNat parse_natural(std::string_view s) {
  s = detail::trim(s);
  if (s.empty()) throw ParseError(0, "expected a natural number");
  BigNat v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(0, "bad natural '" + std::string(s) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

std::string format_baire(const BaireRegion& r) {
  std::string s = "<";
  for (std::size_t i = 0; i < r.seq.size(); ++i) {
    if (i) s += ",";
    s += r.seq[i].str();
  }
  return s + ">";
}

BaireRegion parse_baire(std::string_view text) {
  text = detail::trim(text);
  BaireRegion r;
  if (!text.empty() && text.front() == '<') {
    if (text.back() != '>') throw ParseError(0, "Baire region must end with '>'");
    text = detail::trim(text.substr(1, text.size() - 2));
    if (text.empty()) return r;
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      r.seq.push_back(parse_natural(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return r;
  }
  for (const auto& w : detail::split_words(text)) r.seq.push_back(parse_natural(w));
  return r;
}

bool shortlex_less(const BaireRegion& a, const BaireRegion& b) {
  if (a.seq.size() != b.seq.size()) return a.seq.size() < b.seq.size();
  return a.seq < b.seq;
}

bool BaireSystem::is_subset(const Region& a, const Region& b) const {
  return b.seq.size() <= a.seq.size() && std::equal(b.seq.begin(), b.seq.end(), a.seq.begin());
}

std::optional<BaireRegion> BaireSystem::sample_refinement(const Region& r, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  Region out = r;
  out.seq.emplace_back(uniform_below(rng, 10));
  if (!r.seq.empty() && uniform_below(rng, 2) == 1) out.seq.emplace_back(uniform_below(rng, 10));
  return out;
}

BaireRegion BaireSystem::closed_refinement(const Region& r) const {
  Region out = r;
  out.seq.emplace_back(0);
  return out;
}

std::optional<std::string> BaireSystem::witness_point(std::span<const Region> chain) const {
  if (chain.empty()) return std::nullopt;
  const Region* longest = &chain.front();
  for (const auto& r : chain)
    if (r.seq.size() > longest->seq.size()) longest = &r;
  for (const auto& r : chain)
    if (!is_subset(*longest, r)) return std::nullopt;
  std::string s = "<";
  for (const auto& x : longest->seq) s += x.str() + ",";
  return s + "0,0,...>";
}

// ---- rational intervals ----

std::string format_rational(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  text = detail::trim(text);
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_natural(text));
  } else {
    const BigNat den = parse_natural(text.substr(slash + 1));
    if (den == 0) throw ParseError(0, "zero denominator");
    q = Rational(parse_natural(text.substr(0, slash)), den);
  }
  return negative ? Rational(-q) : q;
}

IntervalSystem::IntervalSystem(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_)) throw Error("interval universe needs lo < hi");
}

IntervalRegion IntervalSystem::normalize(std::vector<std::pair<Rational, Rational>> parts) {
  std::erase_if(parts, [](const auto& p) { return !(p.first < p.second); });
  std::sort(parts.begin(), parts.end());
  IntervalRegion out;
  for (auto& p : parts) {
    if (!out.parts.empty() && p.first < out.parts.back().second) {
      if (out.parts.back().second < p.second) out.parts.back().second = p.second;
    } else {
      out.parts.push_back(std::move(p));
    }
  }
  return out;
}

bool IntervalSystem::is_valid(const Region& r) const {
  if (r.parts.empty()) return false;
  for (std::size_t i = 0; i < r.parts.size(); ++i) {
    if (!(r.parts[i].first < r.parts[i].second)) return false;
    if (i > 0 && r.parts[i].first < r.parts[i - 1].second) return false;
  }
  return true;
}

bool IntervalSystem::is_subset(const Region& a, const Region& b) const {
  // Each part is connected, so it must sit inside a single part of b.
  for (const auto& [lo, hi] : a.parts) {
    const bool inside = std::any_of(b.parts.begin(), b.parts.end(),
                                    [&](const auto& q) { return q.first <= lo && hi <= q.second; });
    if (!inside) return false;
  }
  return true;
}

std::string IntervalSystem::format(const Region& r) const {
  std::string s;
  for (std::size_t i = 0; i < r.parts.size(); ++i) {
    if (i) s += " U ";
    s += "(" + format_rational(r.parts[i].first) + "," + format_rational(r.parts[i].second) + ")";
  }
  return s;
}

IntervalRegion IntervalSystem::parse(std::string_view text) const {
  std::vector<std::pair<Rational, Rational>> parts;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && detail::is_space(text[i])) ++i;
  };
  skip();
  while (i < text.size()) {
    if (!parts.empty()) {
      if (text[i] != 'U' && text[i] != 'u') throw ParseError(0, "expected 'U' between intervals");
      ++i;
      skip();
    }
    if (i >= text.size() || text[i] != '(') throw ParseError(0, "expected '(' to open an interval");
    const auto close = text.find(')', i);
    if (close == std::string_view::npos) throw ParseError(0, "unclosed interval");
    const auto body = text.substr(i + 1, close - i - 1);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw ParseError(0, "interval needs 'lo,hi'");
    Rational lo = parse_rational(body.substr(0, comma));
    Rational hi = parse_rational(body.substr(comma + 1));
    if (!(lo < hi)) throw ParseError(0, "interval needs lo < hi");
    parts.emplace_back(std::move(lo), std::move(hi));
    i = close + 1;
    skip();
  }
  if (parts.empty()) throw ParseError(0, "empty interval region");
  return normalize(std::move(parts));
}

std::optional<IntervalRegion> IntervalSystem::sample_refinement(const Region& r, std::uint64_t seed) const {
  if (r.parts.empty()) return std::nullopt;
  std::mt19937_64 rng(seed);
  const auto& [lo, hi] = r.parts[uniform_below(rng, r.parts.size())];
  const auto a = uniform_below(rng, 10);
  auto b = a + 1 + uniform_below(rng, 10 - a);
  if (a == 0 && b == 10) b = 9;
  const Rational step = (hi - lo) / 10;
  return IntervalRegion{{{lo + step * static_cast<long long>(a), lo + step * static_cast<long long>(b)}}};
}

std::optional<std::string> IntervalSystem::witness_point(std::span<const Region>) const { return std::nullopt; }

// ---- posets ----

bool PosetSystem::is_subset(const Region& a, const Region& b) const {
  if (b == P_.size()) return a <= P_.size();
  if (a == P_.size()) return false;
  return P_.leq(a, b);
}

std::size_t PosetSystem::parse(std::string_view text) const {
  text = detail::trim(text);
  if (text == "*") return P_.size();
  return P_.require_index(text);
}

std::optional<std::size_t> PosetSystem::sample_refinement(const Region& r, std::uint64_t seed) const {
  const Mask candidates = r == P_.size() ? P_.all() : P_.below(r) & ~bit(r);
  if (candidates == 0) return std::nullopt;
  const auto options = mask_indices(candidates);
  std::mt19937_64 rng(seed);
  return options[uniform_below(rng, options.size())];
}

std::optional<std::string> PosetSystem::witness_point(std::span<const Region> chain) const {
  if (chain.empty()) return std::nullopt;
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!is_subset(chain[i], chain[i - 1])) return std::nullopt;
  const Region last = chain.back();
  if (last == P_.size()) return P_.id(0);
  return P_.id(last);
}

}  // namespace bmlab
