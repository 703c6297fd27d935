#ifndef BMLAB_CARDINAL_HPP
#define BMLAB_CARDINAL_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "bmlab/error.hpp"

namespace bmlab {

/// A cardinal that is either a positive natural number or a symbolic aleph.
///
/// Every finite cardinal is below every aleph; alephs are ordered by index.
/// Poset invariants always come back finite; the symbolic alephs appear in
/// ordinal arithmetic (|alpha|) and when reporting declared properties of
/// symbolic region systems.
class Cardinal {
 public:
  static Cardinal finite(std::uint64_t n) {
    if (n == 0) throw Error("finite cardinal must be >= 1");
    return Cardinal(false, n);
  }
  static Cardinal aleph(std::uint64_t k) { return Cardinal(true, k); }

  bool is_finite() const { return !aleph_; }
  bool is_aleph() const { return aleph_; }

  std::uint64_t finite_value() const {
    if (aleph_) throw Error("not a finite cardinal: " + to_string());
    return value_;
  }
  std::uint64_t aleph_index() const {
    if (!aleph_) throw Error("not an aleph: " + to_string());
    return value_;
  }

  friend bool operator==(const Cardinal&, const Cardinal&) = default;
  friend std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b) {
    if (a.aleph_ != b.aleph_) return a.aleph_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

  /// "3", "aleph_0", "aleph_2".
  std::string to_string() const {
    return aleph_ ? "aleph_" + std::to_string(value_) : std::to_string(value_);
  }

 private:
  Cardinal(bool aleph, std::uint64_t value) : aleph_(aleph), value_(value) {}

  bool aleph_;
  std::uint64_t value_;
};

using ExtendedCardinal = Cardinal;
using CardinalSym = Cardinal;

}  // namespace bmlab

#endif  // BMLAB_CARDINAL_HPP
