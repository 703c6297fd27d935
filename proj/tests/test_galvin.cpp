#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "bmlab/galvin.hpp"

using namespace bmlab;

namespace {

BaireRegion B(std::string_view s) { return parse_baire(s); }

std::vector<BaireRegion> Bs(std::initializer_list<const char*> xs) {
  std::vector<BaireRegion> out;
  for (const char* x : xs) out.push_back(B(x));
  return out;
}

BaireRegion random_region(std::mt19937_64& rng, std::size_t max_len) {
  BaireRegion r;
  const std::size_t n = rng() % (max_len + 1);
  for (std::size_t i = 0; i < n; ++i) r.seq.emplace_back(rng() % 12);
  return r;
}

}  // namespace

TEST_CASE("coded base examples") {
  const BaireCodedBase base;
  CHECK(base.supersets(B("<2,5>")) == Bs({"<>", "<2>", "<2,5>"}));
  const auto F = Bs({"<>", "<2,5>"});
  CHECK(base.psi(B("<2,5>"), F) == B("<2,5,5>"));
  CHECK(base.psi_invert(B("<2,5>"), B("<2,5,5>")) == F);
  CHECK_FALSE(base.psi_invert(B("<2,5>"), B("<2,5,8>")));
  CHECK_FALSE(base.psi_invert(B("<2,5>"), B("<2,6,1>")));
  CHECK_THROWS_AS(base.psi(B("<2,5>"), Bs({"<3>"})), Error);
  CHECK(base.pi(Bs({"<3,1>", "<2,9>", "<4,4,4>"})) == B("<2,9>"));
  CHECK(base.pi(B("<7>")) == B("<7>"));
}

TEST_CASE("coded base laws on random regions") {
  const BaireCodedBase base;
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    const auto V = random_region(rng, 8);
    const auto sup = base.supersets(V);
    CHECK(sup.back() == V);
    CHECK(base.pi(V) == V);
    std::set<std::string> images;
    std::vector<BaireRegion> range;
    const std::size_t subsets = std::size_t{1} << std::min<std::size_t>(sup.size(), 6);
    for (std::size_t code = 0; code < subsets; ++code) {
      std::vector<BaireRegion> F;
      for (std::size_t i = 0; i < sup.size() && i < 6; ++i)
        if ((code >> i) & 1U) F.push_back(sup[i]);
      const auto W = base.psi(V, F);
      CHECK(base.is_subset(W, V));
      CHECK(W != V);
      CHECK(base.psi_invert(V, W) == F);
      images.insert(format_baire(W));
      range.push_back(W);
    }
    CHECK(images.size() == subsets);
    // Distinct children of V are disjoint: neither is a prefix of the other.
    for (std::size_t i = 0; i < range.size(); ++i)
      for (std::size_t j = i + 1; j < range.size(); ++j) {
        CHECK_FALSE(base.is_subset(range[i], range[j]));
        CHECK_FALSE(base.is_subset(range[j], range[i]));
      }
  }
}

TEST_CASE("worked auxiliary play") {
  const BaireCodedBase base;
  const auto sigma = sigma_by_id("closure");
  const auto one = hat_simulation(base, Bs({"<>"}), sigma);
  CHECK(one.hats == Bs({"<1>"}));
  CHECK(one.vs == Bs({"<1,0>"}));
  const auto two = hat_simulation(base, Bs({"<>", "<1,0,7>"}), sigma);
  CHECK(two.hats == Bs({"<1>", "<1,0,7,9>"}));
  CHECK(two.vs == Bs({"<1,0>", "<1,0,7,9,0>"}));
  CHECK(decode_history(base, B("<1,0,7>"), B("<1,0,7,9,0>")) == Bs({"<>", "<1,0,7>"}));
  CHECK(decode_history(base, B("<1,0,7>"), B("<1,0,7,9,0,4,4>")) == Bs({"<>", "<1,0,7>"}));
  CHECK(decode_history(base, B("<>"), B("<1,0>")) == Bs({"<>"}));
  CHECK_THROWS_AS(decode_history(base, B("<1,0,7>"), B("<1,0,8>")), DecodeFailure);
  CHECK_THROWS_AS(decode_history(base, B("<1,0,7>"), B("<1,0,7,16>")), DecodeFailure);
  // Mask 8 records <1,0,7> but not the history before it: still in range, and decodes as such.
  CHECK(decode_history(base, B("<1,0,7>"), B("<1,0,7,8>")) == Bs({"<1,0,7>"}));
  CHECK_THROWS_AS(decode_history(base, B("<1,0,7>"), B("<1,0,7,1>")), DecodeFailure);
  CHECK_THROWS_AS(hat_simulation(base, Bs({"<>", "<2>"}), sigma), Error);
}

TEST_CASE("two-tactic rounds 0 and 1") {
  const BaireCodedBase base;
  const auto sigma = sigma_by_id("closure");
  const auto t = galvin_two_tactic(base, sigma);
  CHECK(t.k == 2);
  const auto w0 = Bs({"<>"});
  CHECK(t.respond(w0) == B("<1,0>"));
  const auto w1 = Bs({"<>", "<1,0,7>"});
  CHECK(t.respond(w1) == B("<1,0,7,9,0>"));
  CHECK(t.respond(w1) == t.respond(w1));
}

TEST_CASE("seed 7 horizon 16 audits clean") {
  const BaireCodedBase base;
  for (const auto& id : sigma_ids()) {
    const auto t = galvin_game(7, 16, id);
    REQUIRE(std::holds_alternative<NonemptyCertified>(t.outcome));
    CHECK(t.rounds.size() == 16);
    const auto audit = audit_play(base, sigma_by_id(id), t);
    CHECK(audit.all_match);
    CHECK(audit.rounds.size() == 14);
    CHECK_FALSE(audit.first_mismatch);
    for (const auto& r : audit.rounds) CHECK(r.recovered.size() == r.n);
    const auto j = audit_json(audit);
    CHECK(j["all_match"] == true);
    CHECK(j["first_mismatch"].is_null());
  }
}

TEST_CASE("corrupted transcripts are caught at the right round") {
  const BaireCodedBase base;
  const auto sigma = sigma_by_id("closure");
  const auto clean = galvin_game(11, 10, "closure");
  for (std::size_t n : {0U, 3U, 9U}) {
    auto t = clean;
    t.rounds[n].V.seq.emplace_back(5);
    const auto audit = audit_play(base, sigma, t);
    CHECK_FALSE(audit.all_match);
    CHECK(audit.first_mismatch == n);
  }
  auto tampered = clean;
  tampered.rounds[5].U = B("<9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9,9>");
  const auto audit = audit_play(base, sigma, tampered);
  CHECK_FALSE(audit.all_match);
  REQUIRE(audit.first_mismatch);
  CHECK(*audit.first_mismatch <= 5);
}

TEST_CASE("equal windows give equal answers across different games") {
  const BaireCodedBase base;
  const auto t = galvin_two_tactic(base, sigma_by_id("round-tag"));
  const auto g = galvin_game(21, 8, "round-tag");
  for (std::size_t n = 1; n < g.rounds.size(); ++n) {
    const std::vector<BaireRegion> w{g.rounds[n - 1].U, g.rounds[n].U};
    CHECK(t.respond(w) == g.rounds[n].V);
  }
}

TEST_CASE("batch kernel matches the serial reference and repeats exactly") {
  const auto par = galvin_batch(100, 60, 16, "closure");
  const auto ser = reference::galvin_batch(100, 60, 16, "closure");
  CHECK(par == ser);
  CHECK(par.all_match == 60);
  CHECK(par.certified == 60);
  CHECK(par.decode_fidelity == 60);
  CHECK(par.illegal == 0);
  CHECK(galvin_batch(100, 60, 16, "closure").digest == par.digest);
  CHECK(galvin_batch(101, 60, 16, "closure").digest != par.digest);
  CHECK_THROWS_AS(galvin_batch(0, 1, 16, "nope"), Error);
  CHECK_THROWS_AS(galvin_batch(0, 1, 0, "closure"), Error);
}
