#include "bmlab/commands.hpp"

#include <chrono>
#include <cstdio>
#include <istream>
#include <ostream>

#include "bmlab/hechler.hpp"
#include "bmlab/kernels.hpp"
#include "bmlab/ordinal.hpp"
#include "bmlab/poset_io.hpp"
#include "bmlab/session.hpp"
#include "bmlab/topology.hpp"
#include "text_util.hpp"

namespace bmlab {

namespace {

using Json = nlohmann::ordered_json;

CommandOutput bad_input(const std::exception& e) { return {2, "", std::string("error: ") + e.what() + "\n"}; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

// ---- analyze-poset ----

CommandOutput cmd_analyze_poset(std::string_view text, bool exhaustive, bool json) {
  PosetFile file;
  FinitePoset P;
  try {
    file = parse_poset_text(text);
    P = make_poset(file.raw, file.closure);
    if (P.size() == 0) throw Error("empty poset");
  } catch (const Error& e) {
    return bad_input(e);
  }

  const auto sep = is_separative(P);
  const auto S = souslin_number(P);
  const auto nt_all = noetherian_type(P, P.all());
  const Mask minimal = P.minimal_elements();
  const auto nt_min = noetherian_type(P, minimal);
  const auto nabla = check_nabla(P);
  PiNoetherianResult pnt;
  std::string scan_error;
  try {
    pnt = pi_noetherian_type(P, exhaustive);
  } catch (const Error& e) {
    if (exhaustive && P.size() > 20) return bad_input(e);
    scan_error = e.what();
  }
  const bool violation = !scan_error.empty() || !nabla.holds || pnt.value != Cardinal::finite(2) ||
                         nt_min != Cardinal::finite(2);

  CommandOutput r;
  r.exit_code = violation ? 1 : 0;
  if (json) {
    Json j;
    j["name"] = file.name;
    j["elements"] = P.size();
    j["separative"] = sep.separative;
    if (sep.counterexample) j["witness"] = {P.id(sep.counterexample->second), P.id(sep.counterexample->first)};
    else j["witness"] = nullptr;
    j["souslin"] = S.to_string();
    j["pi_noetherian"] = pnt.value.to_string();
    j["nt_all"] = nt_all.to_string();
    j["nt_minimal"] = nt_min.to_string();
    j["minimal"] = P.format(minimal);
    j["nabla"] = nabla.holds;
    j["exhaustive"] = pnt.exhaustively_verified;
    if (!scan_error.empty()) j["scan_error"] = scan_error;
    j["violation"] = violation;
    r.out = j.dump(2) + "\n";
    return r;
  }
  std::string line = "separative: ";
  if (sep.separative) line += "yes";
  else line += "no (witness " + P.id(sep.counterexample->second) + "," + P.id(sep.counterexample->first) + ")";
  line += "; S=" + S.to_string() + "; πNt=" + pnt.value.to_string() + "; ▽: " + (nabla.holds ? "holds" : "FAILS");
  r.out = line + "\n";
  r.out += "nt(P)=" + nt_all.to_string() + "; nt(minimal)=" + nt_min.to_string() + "; minimal=" + P.format(minimal) + "\n";
  if (exhaustive) r.out += std::string("exhaustive scan: ") + (scan_error.empty() ? "agrees" : scan_error) + "\n";
  return r;
}

// ---- survey ----

CommandOutput cmd_survey(const SurveyOptions& o) {
  if (o.n < 1 || o.n > 6) return {2, "", "error: survey needs 1 <= n <= 6\n"};
  const auto start = std::chrono::steady_clock::now();
  const auto rep = o.serial ? reference::survey_posets(o.n, o.oracle) : survey_posets(o.n, o.oracle);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  CommandOutput r;
  r.exit_code = rep.violations ? 1 : 0;
  if (o.json) {
    Json j;
    j["n"] = rep.n;
    j["posets"] = rep.posets;
    j["separative"] = rep.separative;
    j["pi_noetherian_two"] = rep.pnt_two;
    j["nabla_holds"] = rep.nabla_holds;
    j["minimal_dense_nt2"] = rep.minimal_dense_nt2;
    j["oracle_checked"] = rep.oracle_checked;
    j["oracle_agree"] = rep.oracle_agree;
    j["violations"] = rep.violations;
    j["notes"] = rep.notes;
    if (o.timing) j["seconds"] = secs;
    r.out = j.dump(2) + "\n";
    return r;
  }
  r.out = std::to_string(rep.posets) + " posets, " + std::to_string(rep.violations) + " violations\n";
  r.out += "separative " + std::to_string(rep.separative) + "; πNt=2 " + std::to_string(rep.pnt_two) + "; ▽ " +
           std::to_string(rep.nabla_holds) + "; minimal dense nt=2 " + std::to_string(rep.minimal_dense_nt2) + "\n";
  if (o.oracle)
    r.out += "oracle " + std::to_string(rep.oracle_agree) + "/" + std::to_string(rep.oracle_checked) + " agree\n";
  for (const auto& note : rep.notes) r.out += "violation: " + note + "\n";
  if (o.timing) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "time %.3f s (%s, %d threads)\n", secs, o.serial ? "serial" : "parallel",
                  o.serial ? 1 : kernel_threads());
    r.out += buf;
  }
  return r;
}

// ---- game ----

namespace {

SessionConfig session_config(const GameOptions& o) {
  SessionConfig c;
  c.system = o.system;
  c.horizon = o.horizon;
  c.seed = o.seed;
  c.sigma = o.sigma;
  return c;
}

}  // namespace

CommandOutput cmd_game_run(const GameOptions& o) {
  std::vector<BaireRegion> opening;
  try {
    GameSession probe("run", session_config(o));  // validates the options
    if (o.moves.size() > o.horizon) throw Error("more moves than the horizon allows");
    for (const auto& m : o.moves) opening.push_back(parse_baire(m));
  } catch (const Error& e) {
    return bad_input(e);
  }
  const auto& system = baire_system();
  const auto random = random_empty_player(system, o.seed);
  const Strategy<BaireRegion> empty = [&](std::span<const BaireRegion> h) {
    const std::size_t round = h.size() / 2;
    return round < opening.size() ? opening[round] : random(h);
  };
  const auto machine = as_strategy(galvin_two_tactic(BaireCodedBase{}, sigma_by_id(o.sigma)));
  const auto t = run_game(system, empty, machine, o.horizon);
  CommandOutput r;
  r.out = transcript_json_lines(system, t);
  r.exit_code = std::holds_alternative<IllegalMove>(t.outcome) ? 1 : 0;
  return r;
}

CommandOutput cmd_game_audit(const GameOptions& o) {
  GalvinBatchReport rep;
  std::optional<DecodeAudit> single;
  try {
    if (o.system != "baire") throw Error("unsupported system '" + o.system + "': only baire has a coded pi-base");
    if (o.games == 0) throw Error("--n must be at least 1");
    rep = o.serial ? reference::galvin_batch(o.seed, o.games, o.horizon, o.sigma)
                   : galvin_batch(o.seed, o.games, o.horizon, o.sigma);
    if (o.games == 1) single = audit_play(BaireCodedBase{}, sigma_by_id(o.sigma), galvin_game(o.seed, o.horizon, o.sigma));
  } catch (const Error& e) {
    return bad_input(e);
  }
  CommandOutput r;
  r.exit_code = rep.all_match == rep.games ? 0 : 1;
  char digest[32];
  std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(rep.digest));
  if (o.json) {
    Json j;
    j["games"] = rep.games;
    j["horizon"] = o.horizon;
    j["seed"] = o.seed;
    j["sigma"] = o.sigma;
    j["all_match"] = rep.all_match;
    j["decode_fidelity"] = rep.decode_fidelity;
    j["v_chain_equal"] = rep.v_chain_equal;
    j["certified"] = rep.certified;
    j["illegal"] = rep.illegal;
    j["digest"] = digest;
    j["mismatched_seeds"] = rep.mismatched;
    if (single) j["audit"] = audit_json(*single);
    r.out = j.dump(2) + "\n";
    return r;
  }
  const auto frac = [&](std::size_t k) { return std::to_string(k) + "/" + std::to_string(rep.games); };
  r.out = frac(rep.all_match) + " all-match\n";
  r.out += "decode fidelity " + frac(rep.decode_fidelity) + "; V-chain equal " + frac(rep.v_chain_equal) +
           "; certified " + frac(rep.certified) + "; digest " + digest + "\n";
  for (auto s : rep.mismatched) r.out += "mismatch at seed " + std::to_string(s) + "\n";
  return r;
}

namespace {

std::string join_regions(const nlohmann::ordered_json& arr) {
  std::string s;
  for (const auto& x : arr) {
    if (!s.empty()) s += ", ";
    s += x.get<std::string>();
  }
  return "[" + s + "]";
}

void print_audit(std::ostream& out, const MoveResult& m) {
  if (m.audit.is_null()) {
    out << "audit: decode begins at round 2\n";
    return;
  }
  if (m.audit.contains("failure")) {
    out << "audit: decode FAILED: " << m.audit["failure"].get<std::string>() << "\n";
    return;
  }
  const bool ok = m.audit["history_match"] && m.audit["hat_match"] && m.audit["v_match"];
  out << "audit: recovered " << join_regions(m.audit["recovered"]) << " from the last two moves; hats "
      << join_regions(m.audit["hats"]) << "; " << (ok ? "all match" : "MISMATCH") << "\n";
}

}  // namespace

int run_play_loop(const GameOptions& o, std::istream& in, std::ostream& out) {
  std::optional<GameSession> s;
  try {
    s.emplace("play", session_config(o));
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  }
  out << "EMPTY vs the 2-tactic on " << o.system << ", horizon " << o.horizon << ", sigma " << o.sigma << ", seed "
      << o.seed << "\n"
      << "Enter a basic clopen as naturals (\"3 1 4\" or <3,1,4>); blank for a seeded move; q to quit.\n";
  std::string line;
  while (!s->finished()) {
    const auto state = s->state_json();
    out << "round " << s->transcript().rounds.size() << " [inside " << state["last_v"].get<std::string>() << "]: "
        << std::flush;
    if (!std::getline(in, line)) {
      out << "\n";
      return 0;
    }
    const auto text = detail::trim(line);
    if (text == "q" || text == "quit") return 0;
    std::optional<BaireRegion> u;
    if (!text.empty()) {
      try {
        u = parse_baire(text);
      } catch (const Error& e) {
        out << "rejected: " << e.what() << "\n";
        continue;
      }
    }
    const auto m = s->move(u);
    if (!m.accepted) {
      out << "rejected: " << m.reason;
      if (u) out << " (" << format_baire(*u) << " does not extend " << state["last_v"].get<std::string>() << ")";
      out << "\n";
      continue;
    }
    out << "EMPTY " << format_baire(m.u) << "  NONEMPTY " << format_baire(m.v) << "\n";
    print_audit(out, m);
    if (!m.outcome.is_null()) out << "outcome: " << m.outcome.dump() << "\n";
  }
  return 0;
}

// ---- ordinal ----

CommandOutput cmd_ordinal(std::string_view expr, std::uint32_t lambda_index, bool json) {
  Ordinal a;
  try {
    a = parse_ordinal(expr);
  } catch (const Error& e) {
    return bad_input(e);
  }
  const Cardinal lambda = Cardinal::aleph(lambda_index);
  const auto strings = [](const std::vector<Ordinal>& v) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(x.to_string());
    return s;
  };
  const auto terms = cnf(a);
  const auto truncated = truncated_cnf(a, lambda);
  const auto d = daleth(a, lambda);
  std::vector<Ordinal> segments;
  for (std::size_t j = 0; j <= d; ++j) segments.push_back(normal_segment(a, j, lambda));
  const std::string card = a.is_zero() ? "0" : cardinal_of(a).to_string();

  CommandOutput r;
  if (json) {
    Json j;
    j["alpha"] = a.to_string();
    j["cardinality"] = card;
    j["cnf"] = strings(terms);
    j["lambda"] = lambda.to_string();
    j["truncated"] = strings(truncated);
    j["daleth"] = d;
    j["segments"] = strings(segments);
    r.out = j.dump(2) + "\n";
    return r;
  }
  const auto list = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
    return "[" + s + "]";
  };
  r.out = "alpha = " + a.to_string() + "\n";
  r.out += "|alpha| = " + card + "\n";
  r.out += "cnf: " + list(strings(terms)) + "\n";
  r.out += "truncated at " + lambda.to_string() + ": " + list(strings(truncated)) + "\n";
  r.out += "daleth = " + std::to_string(d) + "\n";
  r.out += "segments: " + list(strings(segments)) + "\n";
  return r;
}

// ---- hechler ----

CommandOutput cmd_hechler_leq(std::string_view lower, std::string_view upper, bool json) {
  HechlerCond a, b;
  try {
    a = parse_hechler(lower);
    b = parse_hechler(upper);
  } catch (const Error& e) {
    return bad_input(e);
  }
  const bool v = hechler_leq(a, b);
  CommandOutput r;
  if (json) {
    Json j;
    j["lower"] = format_hechler(a);
    j["upper"] = format_hechler(b);
    j["leq"] = v;
    r.out = j.dump(2) + "\n";
  } else {
    r.out = format_hechler(a) + " <= " + format_hechler(b) + ": " + (v ? "true" : "false") + "\n";
  }
  return r;
}

CommandOutput cmd_hechler_compat(std::string_view a_text, std::string_view b_text, bool json) {
  HechlerCond a, b;
  Compatibility c;
  try {
    a = parse_hechler(a_text);
    b = parse_hechler(b_text);
    c = hechler_compatible(a, b);
  } catch (const Error& e) {
    return bad_input(e);
  }
  CommandOutput r;
  if (json) {
    Json j;
    j["compatible"] = c.compatible;
    j["witness"] = c.witness ? Json(format_hechler(*c.witness)) : Json();
    r.out = j.dump(2) + "\n";
  } else {
    r.out = c.compatible ? "compatible; witness " + format_hechler(*c.witness) + "\n" : "incompatible\n";
  }
  return r;
}

// ---- space ----

CommandOutput cmd_space(std::string_view text, bool json) {
  SpaceFile file;
  FiniteSpace X;
  try {
    file = parse_space_text(text);
    X = make_space(file);
  } catch (const Error& e) {
    return bad_input(e);
  }
  const auto inv = space_invariants(X);
  const auto tr = check_translation(X);
  const auto& pr = tr.predicates;
  CommandOutput r;
  r.exit_code = tr.violated() ? 1 : 0;
  if (json) {
    Json j;
    j["name"] = file.name;
    j["points"] = X.size();
    j["opens"] = X.opens().size();
    j["hausdorff"] = pr.hausdorff;
    j["quasi_regular"] = pr.quasi_regular;
    j["pi_regular"] = pr.pi_regular;
    j["souslin"] = tr.space_souslin.to_string();
    j["pi_noetherian"] = tr.space_pi_noetherian.to_string();
    j["ro_souslin"] = tr.ro_souslin.to_string();
    j["ro_pi_noetherian"] = tr.ro_pi_noetherian.to_string();
    j["ro_separative"] = tr.ro_separative;
    j["asserted"] = tr.asserted;
    j["agree"] = tr.agree();
    std::vector<std::string> base;
    for (auto m : inv.pi_base) base.push_back(X.format(m));
    j["pi_base"] = base;
    r.out = j.dump(2) + "\n";
    return r;
  }
  r.out = "space " + file.name + ": " + std::to_string(X.size()) + " points, " + std::to_string(X.opens().size()) +
          " open sets\n";
  r.out += "hausdorff: " + yes_no(pr.hausdorff);
  if (pr.hausdorff_witness)
    r.out += " (" + X.point(pr.hausdorff_witness->first) + "," + X.point(pr.hausdorff_witness->second) + ")";
  r.out += "; quasi-regular: " + yes_no(pr.quasi_regular) + "; pi-regular: " + yes_no(pr.pi_regular);
  if (pr.refinement_witness) r.out += " (" + X.format(*pr.refinement_witness) + ")";
  r.out += "\n";
  r.out += "S=" + tr.space_souslin.to_string() + "; πNt=" + tr.space_pi_noetherian.to_string() +
           "; regular open: S=" + tr.ro_souslin.to_string() + "; πNt=" + tr.ro_pi_noetherian.to_string() +
           "; translation: ";
  if (tr.asserted) r.out += tr.agree() ? "agrees" : "VIOLATED";
  else r.out += std::string("not asserted (") + (tr.agree() ? "agrees" : "differs") + ")";
  r.out += "\n";
  return r;
}

}  // namespace bmlab
