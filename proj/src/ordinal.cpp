#include "bmlab/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>

namespace bmlab {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw Error("ordinal coefficient overflow");
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) throw Error("ordinal coefficient overflow");
  return a * b;
}

std::uint32_t checked_exponent(std::uint64_t e) {
  if (e > std::numeric_limits<std::uint32_t>::max()) throw Error("ordinal exponent overflow");
  return static_cast<std::uint32_t>(e);
}

template <class T>
std::strong_ordering compare_u(T a, T b) {
  return a <=> b;
}

// Countable part alone (terms plus finite tail), as a CNF sum.
void add_countable(std::vector<CnfTerm>& terms, std::uint64_t& finite, const std::vector<CnfTerm>& b_terms,
                   std::uint64_t b_finite) {
  if (b_terms.empty()) {
    finite = checked_add(finite, b_finite);
    return;
  }
  const std::uint32_t lead = b_terms.front().exponent;
  while (!terms.empty() && terms.back().exponent < lead) terms.pop_back();
  auto it = b_terms.begin();
  if (!terms.empty() && terms.back().exponent == lead) {
    terms.back().coefficient = checked_add(terms.back().coefficient, it->coefficient);
    ++it;
  }
  terms.insert(terms.end(), it, b_terms.end());
  finite = b_finite;
}

bool is_single_symbol(const Ordinal& b) {
  if (b.finite_part() != 0) return false;
  const auto& h = b.aleph_terms();
  const auto& c = b.countable_terms();
  if (h.size() == 1 && c.empty()) return h.front().coefficient == Ordinal::natural(1);
  return h.empty() && c.size() == 1 && c.front().coefficient == 1;
}

std::string coefficient_suffix(const Ordinal& b) {
  if (b == Ordinal::natural(1)) return "";
  if (b.is_finite() || is_single_symbol(b)) return "*" + b.to_string();
  return "*(" + b.to_string() + ")";
}

}  // namespace

Ordinal Ordinal::natural(std::uint64_t n) {
  Ordinal o;
  o.finite_ = n;
  return o;
}

Ordinal Ordinal::omega(std::uint32_t k) {
  if (k == 0) return omega_power(1);
  Ordinal o;
  o.high_.push_back({k, natural(1)});
  return o;
}

Ordinal Ordinal::omega_power(std::uint32_t e) {
  if (e == 0) return natural(1);
  Ordinal o;
  o.countable_.push_back({e, 1});
  return o;
}

Ordinal Ordinal::from_parts(const std::vector<AlephTerm>& high, const std::vector<CnfTerm>& countable,
                            std::uint64_t finite) {
  Ordinal sum;
  for (const auto& t : high) {
    if (t.index == 0) throw Error("aleph term index must be >= 1");
    sum = ord_add(sum, cardinal_times(t.index, t.coefficient));
  }
  for (const auto& t : countable) {
    Ordinal term;
    if (t.coefficient != 0) {
      term = times_natural(omega_power(t.exponent), t.coefficient);
    }
    sum = ord_add(sum, term);
  }
  return ord_add(sum, natural(finite));
}

bool Ordinal::is_zero() const { return high_.empty() && countable_.empty() && finite_ == 0; }

std::uint64_t Ordinal::finite_value() const {
  if (!is_finite()) throw Error("not a finite ordinal: " + to_string());
  return finite_;
}

std::uint32_t Ordinal::top_index() const { return high_.empty() ? 0 : high_.front().index; }

std::string Ordinal::to_string() const {
  std::vector<std::string> parts;
  for (const auto& t : high_) parts.push_back("w_" + std::to_string(t.index) + coefficient_suffix(t.coefficient));
  for (const auto& t : countable_) {
    std::string s = t.exponent == 1 ? "w" : "w^" + std::to_string(t.exponent);
    if (t.coefficient != 1) s += "*" + std::to_string(t.coefficient);
    parts.push_back(std::move(s));
  }
  if (finite_ != 0 || parts.empty()) parts.push_back(std::to_string(finite_));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  return a.finite_ == b.finite_ && a.countable_ == b.countable_ && a.high_ == b.high_;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  // Term lists are in decreasing magnitude; the first difference decides,
  // and running out of terms of a kind loses to any remaining one.
  const std::size_t nh = std::min(a.high_.size(), b.high_.size());
  for (std::size_t i = 0; i < nh; ++i) {
    if (auto c = compare_u(a.high_[i].index, b.high_[i].index); c != 0) return c;
    if (auto c = a.high_[i].coefficient <=> b.high_[i].coefficient; c != 0) return c;
  }
  if (a.high_.size() != b.high_.size()) return compare_u(a.high_.size(), b.high_.size());
  const std::size_t nc = std::min(a.countable_.size(), b.countable_.size());
  for (std::size_t i = 0; i < nc; ++i) {
    if (auto c = compare_u(a.countable_[i].exponent, b.countable_[i].exponent); c != 0) return c;
    if (auto c = compare_u(a.countable_[i].coefficient, b.countable_[i].coefficient); c != 0) return c;
  }
  if (a.countable_.size() != b.countable_.size()) return compare_u(a.countable_.size(), b.countable_.size());
  return compare_u(a.finite_, b.finite_);
}

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.high_.empty()) {
    Ordinal out = a;
    add_countable(out.countable_, out.finite_, b.countable_, b.finite_);
    return out;
  }
  const std::uint32_t lead = b.high_.front().index;
  Ordinal out;
  for (const auto& t : a.high_) {
    if (t.index < lead) break;
    out.high_.push_back(t);
  }
  auto it = b.high_.begin();
  if (!out.high_.empty() && out.high_.back().index == lead) {
    out.high_.back().coefficient = ord_add(out.high_.back().coefficient, it->coefficient);
    ++it;
  }
  out.high_.insert(out.high_.end(), it, b.high_.end());
  out.countable_ = b.countable_;
  out.finite_ = b.finite_;
  return out;
}

Ordinal cardinal_times(std::uint32_t k, const Ordinal& a) {
  Ordinal out;
  if (k == 0) {
    out.high_ = a.high_;
    for (const auto& t : a.countable_) out.countable_.push_back({checked_exponent(std::uint64_t{t.exponent} + 1), t.coefficient});
    if (a.finite_ != 0) out.countable_.push_back({1, a.finite_});
    return out;
  }
  Ordinal rest;
  for (const auto& t : a.high_) {
    if (t.index > k) out.high_.push_back(t);
    else rest.high_.push_back(t);
  }
  rest.countable_ = a.countable_;
  rest.finite_ = a.finite_;
  if (!rest.is_zero()) out.high_.push_back({k, std::move(rest)});
  return out;
}

Ordinal times_natural(const Ordinal& a, std::uint64_t n) {
  if (n == 0 || a.is_zero()) return {};
  Ordinal out = a;
  if (!out.high_.empty()) {
    out.high_.front().coefficient = times_natural(out.high_.front().coefficient, n);
  } else if (!out.countable_.empty()) {
    out.countable_.front().coefficient = checked_mul(out.countable_.front().coefficient, n);
  } else {
    out.finite_ = checked_mul(out.finite_, n);
  }
  return out;
}

Ordinal natural_times(std::uint64_t n, const Ordinal& a) {
  if (n == 0) return {};
  Ordinal out = a;
  out.finite_ = checked_mul(out.finite_, n);
  return out;
}

Cardinal cardinal_of(const Ordinal& a) {
  if (a.is_zero()) throw Error("cardinal of 0 is undefined here");
  if (a.is_finite()) return Cardinal::finite(a.finite_part());
  return Cardinal::aleph(a.top_index());
}

bool is_cardinally_even(const Ordinal& d) {
  if (d.is_zero()) throw Error("cardinal evenness needs d >= 1");
  if (d.is_finite()) return true;
  if (!d.aleph_terms().empty())
    return d.aleph_terms().size() == 1 && d.countable_terms().empty() && d.finite_part() == 0;
  return d.finite_part() == 0;
}

std::vector<Ordinal> cnf(const Ordinal& a) {
  std::vector<Ordinal> out;
  for (const auto& t : a.aleph_terms()) out.push_back(Ordinal::from_parts({t}, {}, 0));
  if (!a.countable_terms().empty()) out.push_back(Ordinal::from_parts({}, a.countable_terms(), 0));
  if (a.finite_part() != 0) out.push_back(Ordinal::natural(a.finite_part()));
  return out;
}

std::vector<Ordinal> truncated_cnf(const Ordinal& a, const Cardinal& lambda) {
  if (!lambda.is_aleph()) throw Error("truncation cardinal must be infinite");
  std::vector<Ordinal> out;
  Ordinal small;
  for (auto& d : cnf(a)) {
    if (cardinal_of(d) >= lambda) out.push_back(std::move(d));
    else small = ord_add(small, d);
  }
  if (!small.is_zero()) out.push_back(std::move(small));
  return out;
}

std::size_t daleth(const Ordinal& a, const Cardinal& lambda) { return truncated_cnf(a, lambda).size(); }

Ordinal normal_segment(const Ordinal& a, std::size_t j, const Cardinal& lambda) {
  const auto terms = truncated_cnf(a, lambda);
  if (j > terms.size())
    throw Error("segment index " + std::to_string(j) + " exceeds depth " + std::to_string(terms.size()));
  Ordinal sum;
  for (std::size_t i = 0; i < j; ++i) sum = ord_add(sum, terms[i]);
  return sum;
}

NormalInterval normal_interval(const Ordinal& a, std::size_t j, const Cardinal& lambda) {
  const auto terms = truncated_cnf(a, lambda);
  if (j >= terms.size())
    throw Error("interval index " + std::to_string(j) + " needs depth above it, depth is " + std::to_string(terms.size()));
  NormalInterval iv;
  for (std::size_t i = 0; i < j; ++i) iv.lo = ord_add(iv.lo, terms[i]);
  iv.hi = ord_add(iv.lo, terms[j]);
  return iv;
}

namespace {

// A parsed value, remembering when it is a bare power of one cardinal so
// that it can act as a left factor.
struct Parsed {
  Ordinal value;
  std::optional<std::pair<std::uint32_t, std::uint64_t>> cardinal_power;  // (k, n): omega_k^n
};

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal run() {
    auto v = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v.value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, "ordinal expression, column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint64_t natural_literal() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a natural number");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("number too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  Parsed sum() {
    Parsed acc = product();
    while (eat('+')) {
      acc.value = ord_add(acc.value, product().value);
      acc.cardinal_power.reset();
    }
    return acc;
  }

  Parsed product() {
    Parsed acc = power();
    while (eat('*')) {
      const Parsed rhs = power();
      acc = multiply(acc, rhs);
    }
    return acc;
  }

  Parsed multiply(const Parsed& lhs, const Parsed& rhs) {
    Parsed out;
    if (rhs.value.is_finite()) {
      out.value = times_natural(lhs.value, rhs.value.finite_value());
      if (lhs.cardinal_power && rhs.value == Ordinal::natural(1)) out.cardinal_power = lhs.cardinal_power;
      return out;
    }
    if (lhs.value.is_finite()) {
      out.value = natural_times(lhs.value.finite_value(), rhs.value);
      if (lhs.value == Ordinal::natural(1)) out.cardinal_power = rhs.cardinal_power;
      return out;
    }
    if (lhs.cardinal_power) {
      const auto [k, n] = *lhs.cardinal_power;
      out.value = rhs.value;
      for (std::uint64_t i = 0; i < n; ++i) out.value = cardinal_times(k, out.value);
      if (rhs.cardinal_power && rhs.cardinal_power->first == k)
        out.cardinal_power = std::make_pair(k, n + rhs.cardinal_power->second);
      return out;
    }
    fail("unsupported product " + lhs.value.to_string() + " * " + rhs.value.to_string() +
         " (left factor must be a natural or a power of w or w_k)");
  }

  Parsed power() {
    Parsed base = atom();
    if (!eat('^')) return base;
    const std::uint64_t e = natural_literal();
    if (!base.cardinal_power || base.cardinal_power->second != 1)
      fail("exponentiation needs w or w_k as base");
    const std::uint32_t k = base.cardinal_power->first;
    Parsed out;
    out.value = Ordinal::natural(1);
    for (std::uint64_t i = 0; i < e; ++i) out.value = cardinal_times(k, out.value);
    if (e > 0) out.cardinal_power = std::make_pair(k, e);
    return out;
  }

  Parsed atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Parsed inner = sum();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'w') {
      ++pos_;
      std::uint32_t k = 0;
      if (pos_ < text_.size() && text_[pos_] == '_') {
        ++pos_;
        const auto idx = natural_literal();
        if (idx > 1000000) fail("aleph index too large");
        k = static_cast<std::uint32_t>(idx);
      }
      return {Ordinal::omega(k), std::make_pair(k, std::uint64_t{1})};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return {Ordinal::natural(natural_literal()), std::nullopt};
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser(text).run(); }

}  // namespace bmlab
