// bmgl: command-line front end for the bmlab library.

#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bmlab/commands.hpp"
#include "bmlab/service.hpp"

namespace {

int emit(const bmlab::CommandOutput& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

bmlab::HttpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Banach-Mazur games, posets and forcing orders"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::uint64_t env_seed = 0;
  try {
    env_seed = bmlab::default_seed();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  // analyze-poset
  std::string poset_path;
  bool exhaustive = false, json = false;
  auto* analyze = app.add_subcommand("analyze-poset", "Separativity, S, pi-Noetherian type and nabla for a poset file");
  analyze->add_option("file", poset_path, "poset file")->required();
  analyze->add_flag("--exhaustive", exhaustive, "cross-check pi-Noetherian type over every dense subset");
  analyze->add_flag("--json", json, "JSON output");
  analyze->callback([&] {
    action = [&] {
      std::string text;
      if (!read_file(poset_path, text)) return 2;
      return emit(bmlab::cmd_analyze_poset(text, exhaustive, json));
    };
  });

  // survey
  bmlab::SurveyOptions survey_opts;
  auto* survey = app.add_subcommand("survey", "Check every labeled poset of size n");
  survey->add_option("n", survey_opts.n, "poset size")->required()->check(CLI::Range(1, 6));
  survey->add_flag("--serial", survey_opts.serial, "use the serial reference kernel");
  survey->add_flag("--oracle", survey_opts.oracle, "also scan every dense subset");
  survey->add_flag("--json", survey_opts.json, "JSON output");
  survey->callback([&] { action = [&] { return emit(bmlab::cmd_survey(survey_opts)); }; });

  // game
  bmlab::GameOptions game_opts;
  game_opts.seed = env_seed;
  auto* game = app.add_subcommand("game", "Banach-Mazur games against the Galvin 2-tactic");
  game->require_subcommand(1);
  auto add_game_options = [&](CLI::App* sub) {
    sub->add_option("--seed", game_opts.seed, "seed (default: BMGL_SEED or 0)");
    sub->add_option("--horizon", game_opts.horizon, "rounds")->check(CLI::PositiveNumber);
    sub->add_option("--sigma", game_opts.sigma, "NONEMPTY strategy simulated by the tactic (closure, round-tag)");
    sub->add_option("--system", game_opts.system, "region system (baire)");
  };
  auto* run = game->add_subcommand("run", "Play one game and print its transcript as JSON lines");
  add_game_options(run);
  run->add_option("--moves", game_opts.moves, "EMPTY's opening moves, ';'-separated region literals")->delimiter(';');
  run->callback([&] { action = [&] { return emit(bmlab::cmd_game_run(game_opts)); }; });

  auto* audit = game->add_subcommand("audit", "Audit the history decoding over many seeded games");
  add_game_options(audit);
  audit->add_option("--n", game_opts.games, "number of games")->check(CLI::PositiveNumber);
  audit->add_flag("--serial", game_opts.serial, "use the serial reference kernel");
  audit->add_flag("--json", game_opts.json, "JSON output");
  audit->callback([&] { action = [&] { return emit(bmlab::cmd_game_audit(game_opts)); }; });

  auto* play = game->add_subcommand("play", "Play EMPTY yourself against the 2-tactic");
  add_game_options(play);
  play->callback([&] { action = [&] { return bmlab::run_play_loop(game_opts, std::cin, std::cout); }; });

  // serve
  std::string bind = "127.0.0.1:8080";
  std::string state_dir;
  auto* serve = app.add_subcommand("serve", "HTTP+JSON session service");
  serve->add_option("--bind", bind, "host:port");
  serve->add_option("--state-dir", state_dir, "directory for append-only session logs");
  serve->callback([&] {
    action = [&] {
      try {
        const auto [host, port] = bmlab::parse_bind(bind);
        bmlab::SessionStore store(state_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(state_dir));
        bmlab::SessionService service(store);
        bmlab::HttpServer server(service);
        const int bound = server.bind(host, port);
        if (bound < 0) {
          std::cerr << "error: cannot bind " << host << ":" << port << "\n";
          return 2;
        }
        std::cerr << "listening on " << host << ":" << bound << "\n";
        g_server = &server;
        std::signal(SIGINT, on_signal);
        std::signal(SIGTERM, on_signal);
        server.run();
        g_server = nullptr;
        return 0;
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    };
  });

  // ordinal
  std::string expr;
  std::uint32_t lambda = 0;
  auto* ordinal = app.add_subcommand("ordinal", "Normal forms of an ordinal expression");
  ordinal->add_option("expr", expr, "e.g. 'w_1*2 + w*3 + 4'")->required();
  ordinal->add_option("--lambda", lambda, "truncate at aleph_k");
  ordinal->add_flag("--json", json, "JSON output");
  ordinal->callback([&] { action = [&] { return emit(bmlab::cmd_ordinal(expr, lambda, json)); }; });

  // hechler
  std::string cond_a, cond_b;
  auto* hechler = app.add_subcommand("hechler", "Hechler conditions such as '([3,4], {0:7} + 2n+1)'");
  hechler->require_subcommand(1);
  auto* leq = hechler->add_subcommand("leq", "Is the first condition below the second?");
  leq->add_option("lower", cond_a)->required();
  leq->add_option("upper", cond_b)->required();
  leq->add_flag("--json", json, "JSON output");
  leq->callback([&] { action = [&] { return emit(bmlab::cmd_hechler_leq(cond_a, cond_b, json)); }; });
  auto* compat = hechler->add_subcommand("compat", "Common extension of two conditions");
  compat->add_option("a", cond_a)->required();
  compat->add_option("b", cond_b)->required();
  compat->add_flag("--json", json, "JSON output");
  compat->callback([&] { action = [&] { return emit(bmlab::cmd_hechler_compat(cond_a, cond_b, json)); }; });

  // space
  std::string space_path;
  auto* space = app.add_subcommand("space", "Predicates and invariants of a finite space file");
  space->add_option("file", space_path, "space file")->required();
  space->add_flag("--json", json, "JSON output");
  space->callback([&] {
    action = [&] {
      std::string text;
      if (!read_file(space_path, text)) return 2;
      return emit(bmlab::cmd_space(text, json));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return action ? action() : 2;
}
