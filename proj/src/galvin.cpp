#include "bmlab/galvin.hpp"

#include <algorithm>

namespace bmlab {

namespace {

bool is_prefix(const BaireRegion& p, const BaireRegion& s) {
  return p.seq.size() <= s.seq.size() && std::equal(p.seq.begin(), p.seq.end(), s.seq.begin());
}

BaireRegion child(const BaireRegion& V, BigNat symbol) {
  BaireRegion out = V;
  out.seq.push_back(std::move(symbol));
  return out;
}

// Masks coding subsets of the |V|+1 prefixes of V.
bool mask_fits(const BigNat& m, std::size_t length) { return m >> (length + 1) == 0; }

std::vector<BaireRegion> flatten_hat_history(const HatPlay& play) {
  std::vector<BaireRegion> h;
  for (std::size_t i = 0; i < play.hats.size(); ++i) {
    h.push_back(play.hats[i]);
    if (i < play.vs.size()) h.push_back(play.vs[i]);
  }
  return h;
}

}  // namespace

std::vector<BaireRegion> BaireCodedBase::supersets(const Region& V) const {
  std::vector<Region> out;
  for (std::size_t i = 0; i <= V.seq.size(); ++i)
    out.push_back(Region{std::vector<BigNat>(V.seq.begin(), V.seq.begin() + static_cast<std::ptrdiff_t>(i))});
  return out;
}

BaireRegion BaireCodedBase::psi(const Region& V, std::span<const Region> F) const {
  BigNat mask = 0;
  for (const auto& f : F) {
    if (!is_prefix(f, V)) throw Error("psi: " + format_baire(f) + " is not a superset of " + format_baire(V));
    boost::multiprecision::bit_set(mask, static_cast<unsigned>(f.seq.size()));
  }
  return child(V, std::move(mask));
}

std::optional<std::vector<BaireRegion>> BaireCodedBase::psi_invert(const Region& V, const Region& W) const {
  if (W.seq.size() != V.seq.size() + 1 || !is_prefix(V, W)) return std::nullopt;
  const BigNat& m = W.seq.back();
  if (!mask_fits(m, V.seq.size())) return std::nullopt;
  std::vector<Region> F;
  const auto all = supersets(V);
  for (std::size_t i = 0; i < all.size(); ++i)
    if (boost::multiprecision::bit_test(m, static_cast<unsigned>(i))) F.push_back(all[i]);
  return F;
}

std::optional<BaireRegion> BaireCodedBase::range_member_containing(const Region& V, const Region& U) const {
  if (U.seq.size() <= V.seq.size() || !is_prefix(V, U)) return std::nullopt;
  const BigNat& m = U.seq[V.seq.size()];
  if (!mask_fits(m, V.seq.size())) return std::nullopt;
  return child(V, m);
}

BaireRegion BaireCodedBase::pi(std::span<const Region> union_of) const {
  if (union_of.empty()) throw Error("pi of an empty union");
  return *std::min_element(union_of.begin(), union_of.end(), shortlex_less);
}

Strategy<BaireRegion> sigma_by_id(const std::string& id) {
  if (id == "closure")
    return [](std::span<const BaireRegion> h) { return child(h.back(), 0); };
  if (id == "round-tag")
    return [](std::span<const BaireRegion> h) { return child(h.back(), BigNat(h.size() / 2)); };
  throw Error("unknown sigma '" + id + "' (known: closure, round-tag)");
}

std::vector<std::string> sigma_ids() { return {"closure", "round-tag"}; }

HatPlay hat_simulation(const BaireCodedBase& base, std::span<const BaireRegion> pis,
                       const Strategy<BaireRegion>& sigma) {
  HatPlay play;
  for (std::size_t i = 0; i < pis.size(); ++i) {
    if (i > 0 && !base.is_subset(pis[i], play.vs[i - 1]))
      throw Error("illegal move sequence: pi(U_" + std::to_string(i) + ") = " + format_baire(pis[i]) +
                  " is not inside V_" + std::to_string(i - 1) + " = " + format_baire(play.vs[i - 1]));
    play.hats.push_back(base.psi(pis[i], pis.subspan(0, i + 1)));
    const auto history = flatten_hat_history(play);
    BaireRegion v = sigma(std::span<const BaireRegion>(history));
    if (!base.is_subset(v, play.hats.back()))
      throw Error("sigma answered " + format_baire(v) + " outside " + format_baire(play.hats.back()));
    play.vs.push_back(std::move(v));
  }
  return play;
}

std::vector<BaireRegion> decode_history(const BaireCodedBase& base, const BaireRegion& U_prev,
                                        const BaireRegion& U_cur) {
  const BaireRegion V = base.pi(U_prev);
  const auto member = base.range_member_containing(V, base.pi(U_cur));
  if (!member)
    throw DecodeFailure(format_baire(U_cur) + " lies in no coded child of " + format_baire(V));
  auto F = base.psi_invert(V, *member);
  if (!F || F->empty() || F->back() != V)
    throw DecodeFailure("coded child " + format_baire(*member) + " does not record " + format_baire(V));
  // Prefixes of V come out shortest first, which is strict reverse inclusion.
  return *F;
}

KTactic<BaireRegion> galvin_two_tactic(const BaireCodedBase& base, Strategy<BaireRegion> sigma) {
  KTactic<BaireRegion> t;
  t.k = 2;
  t.respond = [base, sigma = std::move(sigma)](std::span<const BaireRegion> window) {
    std::vector<BaireRegion> pis;
    if (window.size() >= 2) pis = decode_history(base, window[window.size() - 2], window.back());
    pis.push_back(base.pi(window.back()));
    return hat_simulation(base, pis, sigma).vs.back();
  };
  return t;
}

DecodeAudit audit_play(const BaireCodedBase& base, const Strategy<BaireRegion>& sigma,
                       const Transcript<BaireRegion>& transcript) {
  DecodeAudit audit;
  const auto& rounds = transcript.rounds;
  std::vector<BaireRegion> pis;
  for (const auto& r : rounds) pis.push_back(base.pi(r.U));

  HatPlay truth;
  bool simulated = true;
  try {
    truth = hat_simulation(base, pis, sigma);
  } catch (const Error&) {
    simulated = false;
  }

  auto note = [&](std::size_t n) {
    if (!audit.first_mismatch || n < *audit.first_mismatch) audit.first_mismatch = n;
  };

  if (simulated) {
    audit.aux_legal = true;
    audit.chain_law = true;
    audit.v_chain_equal = true;
    for (std::size_t i = 0; i < rounds.size(); ++i) {
      if (!base.is_subset(truth.vs[i], truth.hats[i]) ||
          (i + 1 < rounds.size() && !base.is_subset(truth.hats[i + 1], truth.vs[i]))) {
        audit.aux_legal = false;
        note(i);
      }
      const bool strict = base.is_subset(truth.hats[i], pis[i]) && truth.hats[i] != pis[i];
      if (!strict || (i + 1 < rounds.size() && !base.is_subset(pis[i + 1], truth.hats[i]))) {
        audit.chain_law = false;
        note(i);
      }
      if (rounds[i].V != truth.vs[i]) {
        audit.v_chain_equal = false;
        note(i);
      }
    }
  } else {
    note(0);
  }

  bool rounds_ok = true;
  for (std::size_t n = 2; n < rounds.size(); ++n) {
    RoundAudit ra;
    ra.n = n;
    try {
      ra.recovered = decode_history(base, rounds[n - 1].U, rounds[n].U);
      auto with_current = ra.recovered;
      with_current.push_back(base.pi(rounds[n].U));
      const auto rebuilt = hat_simulation(base, with_current, sigma);
      ra.hats = rebuilt.hats;
      ra.vs = rebuilt.vs;
    } catch (const Error& e) {
      ra.failure = e.what();
    }
    if (simulated && ra.failure.empty()) {
      ra.history_match = std::equal(ra.recovered.begin(), ra.recovered.end(), pis.begin(), pis.begin() + static_cast<std::ptrdiff_t>(n)) &&
                         ra.recovered.size() == n;
      ra.hat_match = ra.hats.size() == n + 1 &&
                     std::equal(ra.hats.begin(), ra.hats.end(), truth.hats.begin());
      ra.v_match = ra.vs.size() == n + 1 && std::equal(ra.vs.begin(), ra.vs.end(), truth.vs.begin());
    }
    if (!(ra.history_match && ra.hat_match && ra.v_match)) {
      rounds_ok = false;
      note(n);
    }
    audit.rounds.push_back(std::move(ra));
  }
  audit.all_match = simulated && rounds_ok && audit.aux_legal && audit.v_chain_equal && audit.chain_law;
  return audit;
}

nlohmann::ordered_json round_audit_json(const RoundAudit& r) {
  auto strings = [](const std::vector<BaireRegion>& v) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& x : v) arr.push_back(format_baire(x));
    return arr;
  };
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["recovered"] = strings(r.recovered);
  j["hats"] = strings(r.hats);
  j["vs"] = strings(r.vs);
  j["history_match"] = r.history_match;
  j["hat_match"] = r.hat_match;
  j["v_match"] = r.v_match;
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

nlohmann::ordered_json audit_json(const DecodeAudit& audit) {
  nlohmann::ordered_json j;
  j["rounds"] = nlohmann::ordered_json::array();
  for (const auto& r : audit.rounds) j["rounds"].push_back(round_audit_json(r));
  j["aux_legal"] = audit.aux_legal;
  j["v_chain_equal"] = audit.v_chain_equal;
  j["chain_law"] = audit.chain_law;
  j["all_match"] = audit.all_match;
  j["first_mismatch"] = audit.first_mismatch ? nlohmann::ordered_json(*audit.first_mismatch) : nlohmann::ordered_json();
  return j;
}

Transcript<BaireRegion> galvin_game(std::uint64_t seed, std::size_t horizon, const std::string& sigma_id) {
  static const BaireSystem system;
  const BaireCodedBase base;
  return run_game(system, random_empty_player(system, seed), as_strategy(galvin_two_tactic(base, sigma_by_id(sigma_id))),
                  horizon);
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

struct GameResult {
  std::uint64_t hash = 0;
  bool all_match = false;
  bool fidelity = false;
  bool v_equal = false;
  bool certified = false;
  bool illegal = false;
};

GameResult play_and_audit(std::uint64_t seed, std::size_t horizon, const std::string& sigma_id) {
  static const BaireSystem system;
  const BaireCodedBase base;
  const auto t = galvin_game(seed, horizon, sigma_id);
  const auto audit = audit_play(base, sigma_by_id(sigma_id), t);
  GameResult r;
  r.hash = fnv1a(transcript_json_lines(system, t));
  r.all_match = audit.all_match;
  r.fidelity = std::all_of(audit.rounds.begin(), audit.rounds.end(), [](const RoundAudit& a) { return a.history_match; });
  r.v_equal = audit.v_chain_equal;
  r.certified = std::holds_alternative<NonemptyCertified>(t.outcome);
  r.illegal = std::holds_alternative<IllegalMove>(t.outcome);
  return r;
}

GalvinBatchReport fold(std::uint64_t seed, const std::vector<GameResult>& results) {
  GalvinBatchReport rep;
  rep.games = results.size();
  rep.digest = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    rep.all_match += r.all_match;
    rep.decode_fidelity += r.fidelity;
    rep.v_chain_equal += r.v_equal;
    rep.certified += r.certified;
    rep.illegal += r.illegal;
    if (!r.all_match) rep.mismatched.push_back(seed + i);
    char bytes[8];
    for (int b = 0; b < 8; ++b) bytes[b] = static_cast<char>((r.hash >> (8 * b)) & 0xFF);
    rep.digest = fnv1a(std::string_view(bytes, 8), rep.digest);
  }
  return rep;
}

void check_batch_args(std::size_t horizon, const std::string& sigma_id) {
  if (horizon == 0) throw Error("horizon must be at least 1");
  (void)sigma_by_id(sigma_id);
}

}  // namespace

GalvinBatchReport galvin_batch(std::uint64_t seed, std::size_t games, std::size_t horizon, const std::string& sigma_id) {
  check_batch_args(horizon, sigma_id);
  std::vector<GameResult> results(games);
  const auto count = static_cast<std::int64_t>(games);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < count; ++i)
    results[static_cast<std::size_t>(i)] = play_and_audit(seed + static_cast<std::uint64_t>(i), horizon, sigma_id);
  return fold(seed, results);
}

namespace reference {

GalvinBatchReport galvin_batch(std::uint64_t seed, std::size_t games, std::size_t horizon, const std::string& sigma_id) {
  check_batch_args(horizon, sigma_id);
  std::vector<GameResult> results;
  for (std::size_t i = 0; i < games; ++i) results.push_back(play_and_audit(seed + i, horizon, sigma_id));
  return fold(seed, results);
}

}  // namespace reference

}  // namespace bmlab
