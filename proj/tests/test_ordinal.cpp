#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bmlab/ordinal.hpp"
#include "ordinal_oracle.hpp"

using namespace bmlab;
namespace orc = bmlab::oracle;

namespace {

Ordinal P(std::string_view s) { return parse_ordinal(s); }

std::vector<std::string> strings(const std::vector<Ordinal>& v) {
  std::vector<std::string> out;
  for (const auto& o : v) out.push_back(o.to_string());
  return out;
}

std::vector<std::string> strings(const std::vector<orc::O>& v) {
  std::vector<std::string> out;
  for (const auto& o : v) out.push_back(orc::print(o));
  return out;
}

Ordinal random_ordinal(std::mt19937_64& rng) { return P(orc::random_expr(rng, 3)); }

}  // namespace

TEST_CASE("addition examples") {
  CHECK((P("w") + P("1")).to_string() == "w + 1");
  CHECK(P("5") + P("w") == P("w"));
  CHECK((P("w_1*2 + 3") + P("w")).to_string() == "w_1*2 + w");
  CHECK((P("w_2 + w_1") + P("w_1*3 + 4")).to_string() == "w_2 + w_1*4 + 4");
  CHECK((P("w + 7") + P("w^2")).to_string() == "w^2");
  CHECK(P("0").to_string() == "0");
}

TEST_CASE("multiplication by cardinals and naturals") {
  CHECK(P("w*w").to_string() == "w^2");
  CHECK(P("w_1*w_2") == P("w_2"));
  CHECK(P("w_2*w_1").to_string() == "w_2*w_1");
  CHECK(P("w_1*(w + 1)").to_string() == "w_1*(w + 1)");
  CHECK(P("(w_1*2 + w + 3)*3").to_string() == "w_1*6 + w + 3");
  CHECK(P("3*(w_1*2 + w + 3)").to_string() == "w_1*2 + w + 9");
  CHECK(P("w_1^2").to_string() == "w_1*w_1");
  CHECK(P("w^3*2").to_string() == "w^3*2");
  CHECK(P("w^0") == P("1"));
  CHECK(P("w_0") == P("w"));
}

TEST_CASE("cardinality and evenness") {
  CHECK(cardinal_of(P("7")) == Cardinal::finite(7));
  CHECK(cardinal_of(P("w*3 + 4")) == Cardinal::aleph(0));
  CHECK(cardinal_of(P("w_1*2 + w*3")) == Cardinal::aleph(1));
  CHECK_THROWS_AS(cardinal_of(P("0")), Error);

  for (int n = 1; n <= 10; ++n) CHECK(is_cardinally_even(Ordinal::natural(static_cast<std::uint64_t>(n))));
  CHECK_FALSE(is_cardinally_even(P("w + 1")));
  CHECK(is_cardinally_even(P("w_1*2")));
  CHECK(is_cardinally_even(P("w*5 + w^3")) == true);
  CHECK_FALSE(is_cardinally_even(P("w_1 + w")));
}

TEST_CASE("cardinal normal forms") {
  CHECK(cnf(P("0")).empty());
  CHECK(strings(cnf(P("w_2"))) == std::vector<std::string>{"w_2"});
  CHECK(strings(cnf(P("w_1*2 + w*3 + 4"))) == std::vector<std::string>{"w_1*2", "w*3", "4"});

  const auto l1 = Cardinal::aleph(1);
  CHECK(strings(truncated_cnf(P("w_1*2 + w*3 + 4"), l1)) == std::vector<std::string>{"w_1*2", "w*3 + 4"});
  CHECK(strings(truncated_cnf(P("w*3 + 4"), l1)) == std::vector<std::string>{"w*3 + 4"});
  for (const char* mu : {"w_1", "w_2", "w_3"}) CHECK(strings(truncated_cnf(P(mu), l1)) == std::vector<std::string>{mu});
  CHECK_THROWS_AS(truncated_cnf(P("w"), Cardinal::finite(3)), Error);
}

TEST_CASE("depth, segments and intervals") {
  const auto l1 = Cardinal::aleph(1);
  for (const char* mu : {"w_1", "w_2", "w_5"}) CHECK(daleth(P(mu), l1) == 1);
  CHECK(daleth(P("0"), l1) == 0);

  const auto a = P("w_1*2 + w*3 + 4");
  CHECK(daleth(a, l1) == 2);
  CHECK(normal_segment(a, 0, l1) == P("0"));
  CHECK(normal_segment(a, 1, l1).to_string() == "w_1*2");
  CHECK(normal_segment(a, 2, l1) == a);
  const auto iv = normal_interval(a, 1, l1);
  CHECK(iv.lo.to_string() == "w_1*2");
  CHECK(iv.hi == a);
  CHECK_THROWS_AS(normal_segment(a, 3, l1), Error);
  CHECK_THROWS_AS(normal_interval(a, 2, l1), Error);
}

TEST_CASE("countable ordinals have depth 1 below aleph_1") {
  std::mt19937_64 rng(1);
  const auto l1 = Cardinal::aleph(1);
  for (int i = 0; i < 500; ++i) {
    auto o = random_ordinal(rng);
    if (o.top_index() != 0) continue;
    CHECK(daleth(o, l1) == (o.is_zero() ? 0U : 1U));
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(P("(w + 1)*w"), ParseError);
  CHECK_THROWS_AS(P("w^w"), ParseError);
  CHECK_THROWS_AS(P("(w + 1)^2"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(P("3 +"), ParseError);
  CHECK_THROWS_AS(P("w_"), ParseError);
  CHECK_THROWS_AS(P("x"), ParseError);
  CHECK_THROWS_AS(P("(w"), ParseError);
  CHECK_THROWS_AS(P("99999999999999999999"), ParseError);
}

TEST_CASE("values agree with the definition-unfolding oracle") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 3000; ++i) {
    const std::string expr = orc::random_expr(rng, 3);
    CAPTURE(expr);
    const Ordinal m = P(expr);
    const orc::O o = orc::parse(expr);
    REQUIRE(m.to_string() == orc::print(o));
    CHECK(strings(cnf(m)) == strings(orc::cnf(o)));
    for (int l = 0; l <= 3; ++l)
      CHECK(strings(truncated_cnf(m, Cardinal::aleph(static_cast<std::uint64_t>(l)))) ==
            strings(orc::truncated_cnf(o, l)));
    if (!m.is_zero()) {
      const int k = orc::card_index(o);
      if (k < 0) CHECK(cardinal_of(m) == Cardinal::finite(orc::finite_value(o)));
      else CHECK(cardinal_of(m) == Cardinal::aleph(static_cast<std::uint64_t>(k)));
    }
  }
}

TEST_CASE("sums and comparisons agree with the oracle") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 2000; ++i) {
    const std::string ea = orc::random_expr(rng, 3);
    const std::string eb = orc::random_expr(rng, 3);
    CAPTURE(ea);
    CAPTURE(eb);
    const Ordinal a = P(ea), b = P(eb);
    const orc::O oa = orc::parse(ea), ob = orc::parse(eb);
    CHECK((a + b).to_string() == orc::print(orc::add(oa, ob)));
    const int c = orc::cmp(oa, ob);
    CHECK((a < b) == (c < 0));
    CHECK((a == b) == (c == 0));
  }
}

TEST_CASE("normal forms re-sum to the input") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 2000; ++i) {
    const Ordinal a = random_ordinal(rng);
    Ordinal sum;
    for (const auto& d : cnf(a)) {
      CHECK(is_cardinally_even(d));
      sum = sum + d;
    }
    CHECK(sum == a);
    for (std::uint64_t l = 0; l <= 3; ++l) {
      const auto lambda = Cardinal::aleph(l);
      const auto t = truncated_cnf(a, lambda);
      Ordinal s;
      for (const auto& d : t) s = s + d;
      CHECK(s == a);
      CHECK(daleth(a, lambda) == t.size());
      for (std::size_t j = 0; j < t.size(); ++j) CHECK(normal_segment(a, j, lambda) <= normal_segment(a, j + 1, lambda));
    }
  }
}

TEST_CASE("normalisation is idempotent and printing round-trips") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 2000; ++i) {
    const Ordinal a = random_ordinal(rng);
    CHECK(P(a.to_string()) == a);
    const Ordinal again = Ordinal::from_parts(a.aleph_terms(), a.countable_terms(), a.finite_part());
    CHECK(again == a);

    // Unsorted pieces with redundant entries.
    std::vector<AlephTerm> high;
    for (int t = 0; t < 3; ++t)
      high.push_back({static_cast<std::uint32_t>(1 + rng() % 3), random_ordinal(rng)});
    std::vector<CnfTerm> countable{{static_cast<std::uint32_t>(1 + rng() % 3), rng() % 3},
                                   {static_cast<std::uint32_t>(1 + rng() % 3), 1 + rng() % 3}};
    const Ordinal n1 = Ordinal::from_parts(high, countable, rng() % 4);
    const Ordinal n2 = Ordinal::from_parts(n1.aleph_terms(), n1.countable_terms(), n1.finite_part());
    CHECK(n1 == n2);
  }
}

TEST_CASE("order is total and addition is monotone") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1500; ++i) {
    const Ordinal a = random_ordinal(rng), b = random_ordinal(rng), c = random_ordinal(rng);
    CHECK(((a < b) + (a == b) + (b < a)) == 1);
    if (a < b) {
      CHECK(c + a < c + b);
      CHECK(a + c <= b + c);
    }
    CHECK(a <= a + c);
    CHECK(c <= a + c);
  }
}
