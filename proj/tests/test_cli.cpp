#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bmlab/commands.hpp"
#include "bmlab/galvin.hpp"

using namespace bmlab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in, "missing " << path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data(const std::string& name) { return slurp(std::string(BMLAB_TEST_DIR) + "/data/" + name); }
std::string golden(const std::string& name) { return slurp(std::string(BMLAB_TEST_DIR) + "/golden/" + name); }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

struct Run {
  int code;
  std::string out;
};

// Runs the real binary; stderr is discarded.
Run bmgl(const std::string& args) {
  const std::string cmd = std::string(BMGL_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("analyze-poset") {
  const auto diamond = cmd_analyze_poset(data("diamond_minus_bottom.poset"), false, false);
  CHECK(diamond.exit_code == 0);
  CHECK(first_line(diamond.out) == "separative: yes; S=3; πNt=2; ▽: holds");
  CHECK(diamond.out == golden("analyze_diamond.txt"));
  CHECK(cmd_analyze_poset(data("diamond_minus_bottom.poset"), false, true).out == golden("analyze_diamond.json"));

  const auto chain = cmd_analyze_poset(data("chain2.poset"), true, false);
  CHECK(chain.exit_code == 0);
  CHECK(first_line(chain.out).rfind("separative: no (witness c1,c0)", 0) == 0);
  CHECK(chain.out.find("exhaustive scan: agrees") != std::string::npos);

  const auto bad = cmd_analyze_poset(data("malformed.poset"), false, false);
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("line 3") != std::string::npos);
  CHECK(cmd_analyze_poset("poset x\nelements a b\nleq a b\nleq b a\n", false, false).exit_code == 2);
}

TEST_CASE("survey") {
  SurveyOptions o;
  o.timing = false;
  o.n = 3;
  const auto three = cmd_survey(o);
  CHECK(three.exit_code == 0);
  CHECK(first_line(three.out) == "19 posets, 0 violations");
  o.n = 5;
  o.oracle = true;
  const auto five = cmd_survey(o);
  CHECK(first_line(five.out) == "4231 posets, 0 violations");
  CHECK(five.out.find("oracle 4231/4231 agree") != std::string::npos);
  o.serial = true;
  CHECK(cmd_survey(o).out == five.out);
  o.n = 7;
  CHECK(cmd_survey(o).exit_code == 2);
  o.n = 4;
  o.json = true;
  const auto j = nlohmann::json::parse(cmd_survey(o).out);
  CHECK(j["posets"] == 219);
  CHECK(j["violations"] == 0);
}

TEST_CASE("game run") {
  GameOptions o;
  o.seed = 7;
  o.horizon = 4;
  const auto a = cmd_game_run(o);
  CHECK(a.exit_code == 0);
  CHECK(a.out == cmd_game_run(o).out);
  CHECK(a.out == golden("game_run_seed7_h4.jsonl"));

  o.moves = {"<3>", "3 2 0 0 9"};
  const auto scripted = cmd_game_run(o);
  CHECK(scripted.exit_code == 0);
  CHECK(first_line(scripted.out) == R"({"n":0,"U":"<3>","V":"<3,2,0>"})");
  CHECK(scripted.out.find(R"("U":"<3,2,0,0,9>")") != std::string::npos);

  o.moves = {"<3>", "<4>"};
  const auto illegal = cmd_game_run(o);
  CHECK(illegal.exit_code == 1);
  CHECK(illegal.out.find("not a subset of previous V") != std::string::npos);

  o.moves = {"<x>"};
  CHECK(cmd_game_run(o).exit_code == 2);
  o.moves = {"<1>", "<1>", "<1>", "<1>", "<1>"};
  CHECK(cmd_game_run(o).exit_code == 2);
  o.moves.clear();
  o.system = "interval";
  CHECK(cmd_game_run(o).exit_code == 2);
  o.system = "baire";
  o.sigma = "nope";
  CHECK(cmd_game_run(o).exit_code == 2);
}

TEST_CASE("game audit") {
  GameOptions o;
  o.seed = 7;
  o.horizon = 16;
  o.games = 40;
  const auto r = cmd_game_audit(o);
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == "40/40 all-match");
  o.serial = true;
  CHECK(cmd_game_audit(o).out == r.out);

  o.games = 1;
  o.horizon = 4;
  o.json = true;
  CHECK(cmd_game_audit(o).out == golden("audit_seed7_h4.json"));
}

TEST_CASE("game play rejects and explains") {
  GameOptions o;
  o.seed = 7;
  o.horizon = 3;
  std::istringstream in("3\n4\nzz\n3 2 0 1\n\n");
  std::ostringstream out;
  CHECK(run_play_loop(o, in, out) == 0);
  const auto s = out.str();
  CHECK(s.find("EMPTY <3>  NONEMPTY <3,2,0>") != std::string::npos);
  CHECK(s.find("rejected: not a subset of previous V (<4> does not extend <3,2,0>)") != std::string::npos);
  CHECK(s.find("rejected: bad natural 'zz'") != std::string::npos);
  CHECK(s.find("audit: decode begins at round 2") != std::string::npos);
  CHECK(s.find("all match") != std::string::npos);
  CHECK(s.find(R"(outcome: {"outcome":"NonemptyCertified")") != std::string::npos);

  std::istringstream quit("q\n");
  std::ostringstream out2;
  CHECK(run_play_loop(o, quit, out2) == 0);
  CHECK(out2.str().find("EMPTY <") == std::string::npos);
}

TEST_CASE("ordinal, hechler and space commands") {
  CHECK(cmd_ordinal("w_1*2 + w*3 + 4", 1, false).out == golden("ordinal_lambda1.txt"));
  const auto j = nlohmann::json::parse(cmd_ordinal("w_1*2 + w*3 + 4", 0, true).out);
  CHECK(j["daleth"] == 3);
  CHECK(j["cardinality"] == "aleph_1");
  CHECK(cmd_ordinal("(w+1)*(w+1)", 0, false).exit_code == 2);
  CHECK(cmd_ordinal("w_1 +", 0, false).exit_code == 2);
  CHECK(cmd_ordinal("0", 0, false).exit_code == 0);

  CHECK(cmd_hechler_leq("([3,4], 1)", "([3], 0)", false).out == "([3,4], 1) <= ([3], 0): true\n");
  CHECK(cmd_hechler_leq("([3,0], 5)", "([3], 1)", false).out.find("false") != std::string::npos);
  CHECK(cmd_hechler_compat("([], n)", "([5], 0)", false).out == "compatible; witness ([5], n)\n");
  CHECK(cmd_hechler_compat("([], 9)", "([3], 0)", false).out == "incompatible\n");
  CHECK(cmd_hechler_compat("([], 9", "([3], 0)", false).exit_code == 2);

  CHECK(cmd_space(data("sierpinski.space"), false).out == golden("space_sierpinski.txt"));
  CHECK(cmd_space("space s\npoints a\nsubbasis b\n", false).exit_code == 2);
}

TEST_CASE("binary exit codes and determinism") {
  CHECK(bmgl("survey 7").code == 2);
  CHECK(bmgl("survey 3").code == 0);
  CHECK(bmgl(std::string("analyze-poset ") + BMLAB_TEST_DIR + "/data/malformed.poset").code == 2);
  CHECK(bmgl("analyze-poset /nonexistent/file").code == 2);
  CHECK(bmgl("frobnicate").code == 2);
  const auto a = bmgl("game run --seed 7 --horizon 6");
  const auto b = bmgl("game run --seed 7 --horizon 6");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const std::string with_env = std::string("BMGL_SEED=7 ") + BMGL_PATH + " game run --horizon 6";
  FILE* p = popen(with_env.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  pclose(p);
  CHECK(out == a.out);
  CHECK(bmgl("game run --moves '<3>;<3,2,0,0,9>' --horizon 2 --seed 7").out.find("<3,2,0,0,9>") != std::string::npos);
  CHECK(bmgl("game audit --n 20 --horizon 16 --seed 7").out.rfind("20/20 all-match", 0) == 0);
  CHECK(bmgl("hechler compat '([], n)' '([5], 0)'").out == "compatible; witness ([5], n)\n");
}
