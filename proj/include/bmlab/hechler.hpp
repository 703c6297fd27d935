#ifndef BMLAB_HECHLER_HPP
#define BMLAB_HECHLER_HPP

// Hechler forcing on finitely represented conditions. A condition (s, f)
// pairs a finite stem with a side function; (t, g) <= (s, f) when t extends
// s, g >= f from |t| on, and the new stem entries sit on or above f.
//
// Side functions are eventually affine: f(n) = a*n + c except at finitely
// many listed points. That class is closed under pointwise max, so common
// extensions stay representable.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bmlab/error.hpp"

namespace bmlab {

__extension__ typedef unsigned __int128 u128;

class EvFun {
 public:
  EvFun() = default;
  /// Drops exceptions that agree with the tail.
  EvFun(std::map<std::uint64_t, std::uint64_t> exceptions, std::uint64_t slope, std::uint64_t intercept);

  static EvFun constant(std::uint64_t c) { return EvFun({}, 0, c); }
  static EvFun identity() { return EvFun({}, 1, 0); }
  static EvFun affine(std::uint64_t a, std::uint64_t c) { return EvFun({}, a, c); }

  u128 operator()(std::uint64_t n) const;
  u128 tail(std::uint64_t n) const { return u128(slope_) * n + intercept_; }

  const std::map<std::uint64_t, std::uint64_t>& exceptions() const { return exceptions_; }
  std::uint64_t slope() const { return slope_; }
  std::uint64_t intercept() const { return intercept_; }
  /// 1 + largest exception key, 0 without exceptions; f is affine from here on.
  std::uint64_t tail_start() const;

  /// "{0:7} + 2n+1", "n", "3", "{2:0} + n+4".
  std::string to_string() const;

  friend bool operator==(const EvFun&, const EvFun&) = default;

 private:
  std::map<std::uint64_t, std::uint64_t> exceptions_;
  std::uint64_t slope_ = 0;
  std::uint64_t intercept_ = 0;
};

/// f(n) <= g(n) for all but finitely many n.
bool ev_leq_star(const EvFun& f, const EvFun& g);
/// f(n) <= g(n) for every n >= from.
bool ev_leq_from(const EvFun& f, const EvFun& g, std::uint64_t from);
/// Pointwise max. Throws Error if a value leaves 64 bits or the result
/// would need more than max_max_exceptions listed points.
EvFun ev_max(const EvFun& f, const EvFun& g);
inline constexpr std::size_t max_max_exceptions = 1 << 20;

using Stem = std::vector<std::uint64_t>;

Stem concat(const Stem& s, const Stem& t);
bool extends(const Stem& t, const Stem& s);

struct HechlerCond {
  Stem stem;
  EvFun side;

  friend bool operator==(const HechlerCond&, const HechlerCond&) = default;
};

/// (t, g) <= (s, f). A preorder: reflexive and transitive, not antisymmetric.
bool hechler_leq(const HechlerCond& lower, const HechlerCond& upper);

struct Compatibility {
  bool compatible = false;
  std::optional<HechlerCond> witness;  // longer stem with the pointwise max of the sides
};

Compatibility hechler_compatible(const HechlerCond& a, const HechlerCond& b);

/// Literal syntax: "([3,4], {0:7} + 2n+1)". Tails are sums of terms
/// "c", "n", "an", "a*n". Throws ParseError.
HechlerCond parse_hechler(std::string_view text);
EvFun parse_evfun(std::string_view text);
std::string format_stem(const Stem& s);
std::string format_hechler(const HechlerCond& c);

}  // namespace bmlab

#endif  // BMLAB_HECHLER_HPP
