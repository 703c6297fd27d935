#ifndef BMLAB_COMMANDS_HPP
#define BMLAB_COMMANDS_HPP

// The bmgl subcommands as plain functions, so tests can run them in-process.
// Exit codes: 0 fine, 1 an invariant or audit failed, 2 bad input.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bmlab {

struct CommandOutput {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CommandOutput cmd_analyze_poset(std::string_view text, bool exhaustive, bool json);

struct SurveyOptions {
  std::size_t n = 3;
  bool serial = false;
  bool oracle = false;
  bool json = false;
  bool timing = true;
};
CommandOutput cmd_survey(const SurveyOptions& o);

struct GameOptions {
  std::string system = "baire";
  std::uint64_t seed = 0;
  std::size_t horizon = 16;
  std::string sigma = "closure";
  std::vector<std::string> moves;  // EMPTY's opening moves; the seeded player continues
  std::size_t games = 1000;
  bool serial = false;
  bool json = false;
};
/// Transcript as JSON lines.
CommandOutput cmd_game_run(const GameOptions& o);
/// Seeds seed .. seed+games-1 against the 2-tactic.
CommandOutput cmd_game_audit(const GameOptions& o);
/// Terminal loop: the human plays EMPTY. Returns the exit code.
int run_play_loop(const GameOptions& o, std::istream& in, std::ostream& out);

CommandOutput cmd_ordinal(std::string_view expr, std::uint32_t lambda_index, bool json);

CommandOutput cmd_hechler_leq(std::string_view lower, std::string_view upper, bool json);
CommandOutput cmd_hechler_compat(std::string_view a, std::string_view b, bool json);

CommandOutput cmd_space(std::string_view text, bool json);

}  // namespace bmlab

#endif  // BMLAB_COMMANDS_HPP
