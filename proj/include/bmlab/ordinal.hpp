#ifndef BMLAB_ORDINAL_HPP
#define BMLAB_ORDINAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmlab/cardinal.hpp"

namespace bmlab {

/// omega^exponent * coefficient with exponent >= 1 and coefficient >= 1.
struct CnfTerm {
  std::uint32_t exponent;
  std::uint64_t coefficient;

  friend bool operator==(const CnfTerm&, const CnfTerm&) = default;
};

struct AlephTerm;

/// An ordinal in the class
///
///     omega_k1 * b1 + ... + omega_kn * bn  +  (countable CNF part)  +  n
///
/// with k1 > ... > kn >= 1, each b_i nonzero and below omega_{k_i + 1}
/// (so its own aleph terms have index <= k_i), and the countable part a
/// base-omega Cantor normal form with natural exponents. Values are kept
/// canonical by construction, so == is equality of ordinals.
class Ordinal {
 public:
  Ordinal() = default;

  static Ordinal natural(std::uint64_t n);
  /// omega_k; omega_0 is omega.
  static Ordinal omega(std::uint32_t k = 0);
  static Ordinal omega_power(std::uint32_t e);

  /// Sums the pieces in order (each omega_k * b via left multiplication), so
  /// unsorted or redundant input comes back canonical.
  static Ordinal from_parts(const std::vector<AlephTerm>& high, const std::vector<CnfTerm>& countable,
                            std::uint64_t finite);

  bool is_zero() const;
  bool is_finite() const { return high_.empty() && countable_.empty(); }
  /// Throws unless finite.
  std::uint64_t finite_value() const;

  const std::vector<AlephTerm>& aleph_terms() const { return high_; }
  const std::vector<CnfTerm>& countable_terms() const { return countable_; }
  std::uint64_t finite_part() const { return finite_; }

  /// Largest aleph index among the terms (0 if none).
  std::uint32_t top_index() const;

  /// w_1*2 + w*3 + 4; the zero ordinal prints as 0.
  std::string to_string() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  friend Ordinal ord_add(const Ordinal& a, const Ordinal& b);
  friend Ordinal cardinal_times(std::uint32_t k, const Ordinal& a);
  friend Ordinal times_natural(const Ordinal& a, std::uint64_t n);
  friend Ordinal natural_times(std::uint64_t n, const Ordinal& a);

  std::vector<AlephTerm> high_;
  std::vector<CnfTerm> countable_;
  std::uint64_t finite_ = 0;
};

/// omega_index * coefficient, index >= 1.
struct AlephTerm {
  std::uint32_t index;
  Ordinal coefficient;

  friend bool operator==(const AlephTerm&, const AlephTerm&) = default;
};

Ordinal ord_add(const Ordinal& a, const Ordinal& b);
inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return ord_add(a, b); }

/// omega_k * a (left multiplication by a cardinal; k = 0 is omega).
Ordinal cardinal_times(std::uint32_t k, const Ordinal& a);
/// a * n.
Ordinal times_natural(const Ordinal& a, std::uint64_t n);
/// n * a.
Ordinal natural_times(std::uint64_t n, const Ordinal& a);

/// |a| for a >= 1: finite n, aleph_0 for infinite countable, else the top
/// aleph. Throws on 0.
Cardinal cardinal_of(const Ordinal& a);

/// d = |d| * b for some b. Throws on 0.
bool is_cardinally_even(const Ordinal& d);

/// Cardinal normal form: cardinally even terms of strictly decreasing
/// cardinality summing to a. Empty for 0.
std::vector<Ordinal> cnf(const Ordinal& a);

/// The lambda-truncated form: CNF terms of size >= lambda, then every
/// smaller term collapsed into one. lambda must be infinite.
std::vector<Ordinal> truncated_cnf(const Ordinal& a, const Cardinal& lambda);

/// Number of terms of the lambda-truncated form.
std::size_t daleth(const Ordinal& a, const Cardinal& lambda);

/// Sum of the first j truncated terms, j <= daleth.
Ordinal normal_segment(const Ordinal& a, std::size_t j, const Cardinal& lambda);

/// [lo, hi) with lo = segment j and hi = segment j+1, j < daleth.
struct NormalInterval {
  Ordinal lo;
  Ordinal hi;
};
NormalInterval normal_interval(const Ordinal& a, std::size_t j, const Cardinal& lambda);

/// Expression grammar:
///
///     sum     := product ('+' product)*
///     product := power ('*' power)*
///     power   := atom ('^' natural)?
///     atom    := natural | 'w' | 'w_' natural | '(' sum ')'
///
/// Products need a natural on one side or a bare cardinal (w, w_k, or a
/// power of one) on the left; anything else leaves the class and is
/// rejected. Powers take w or w_k as base.
Ordinal parse_ordinal(std::string_view text);

}  // namespace bmlab

#endif  // BMLAB_ORDINAL_HPP
