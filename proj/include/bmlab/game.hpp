#ifndef BMLAB_GAME_HPP
#define BMLAB_GAME_HPP

// Banach-Mazur game referee over a pluggable region system.
//
// EMPTY opens with U0, NONEMPTY answers V0 inside U0, EMPTY plays U1 inside
// V0, and so on up to a horizon. A strategy sees the whole history
// (U0, V0, ..., Un) and returns its move; a k-tactic only ever receives the
// last k EMPTY moves.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "bmlab/error.hpp"
#include "json.hpp"

namespace bmlab {

/// What the referee needs from a space. Regions denote nonempty opens.
template <class S>
concept RegionSystem = requires(const S& s, const typename S::Region& r, std::span<const typename S::Region> chain,
                                std::uint64_t seed, std::string_view text) {
  typename S::Region;
  { s.name() } -> std::convertible_to<std::string>;
  { s.root() } -> std::same_as<typename S::Region>;
  { s.is_valid(r) } -> std::same_as<bool>;
  { s.is_subset(r, r) } -> std::same_as<bool>;
  { s.format(r) } -> std::convertible_to<std::string>;
  { s.parse(text) } -> std::same_as<typename S::Region>;
  { s.sample_refinement(r, seed) } -> std::same_as<std::optional<typename S::Region>>;
  { s.witness_point(chain) } -> std::same_as<std::optional<std::string>>;
};

/// Systems whose every region has a refinement whose closure stays inside.
template <class S>
concept ClosedRefinementSystem = RegionSystem<S> && requires(const S& s, const typename S::Region& r) {
  { s.closed_refinement(r) } -> std::same_as<typename S::Region>;
};

enum class Player { Empty, Nonempty };

inline const char* player_name(Player p) { return p == Player::Empty ? "EMPTY" : "NONEMPTY"; }

template <class R>
using Strategy = std::function<R(std::span<const R> history)>;

/// Responds from the last k EMPTY moves only (fewer in the first rounds).
template <class R>
struct KTactic {
  std::size_t k = 1;
  std::function<R(std::span<const R> window)> respond;
};

/// NONEMPTY strategy that hands the tactic a freshly built window and
/// nothing else.
template <class R>
Strategy<R> as_strategy(KTactic<R> tactic) {
  return [tactic = std::move(tactic)](std::span<const R> history) {
    std::vector<R> window;
    const std::size_t moves = (history.size() + 1) / 2;  // EMPTY moves sit at even positions
    const std::size_t first = moves > tactic.k ? moves - tactic.k : 0;
    for (std::size_t i = first; i < moves; ++i) window.push_back(history[2 * i]);
    return tactic.respond(std::span<const R>(window));
  };
}

struct NonemptyCertified {
  std::string witness;
};
struct Undetermined {
  std::size_t horizon;
};
struct IllegalMove {
  std::size_t round;
  Player mover;
  std::string reason;
};
using Outcome = std::variant<NonemptyCertified, Undetermined, IllegalMove>;

template <class R>
struct Round {
  R U;
  R V;
};

template <class R>
struct Transcript {
  std::vector<Round<R>> rounds;
  Outcome outcome = Undetermined{0};
};

/// U0, V0, U1, V1, ...
template <class R>
std::vector<R> flatten(const std::vector<Round<R>>& rounds) {
  std::vector<R> out;
  for (const auto& r : rounds) {
    out.push_back(r.U);
    out.push_back(r.V);
  }
  return out;
}

/// The referee: one half-round at a time, so that a session can also be
/// driven move by move.
template <RegionSystem S>
class GameState {
 public:
  using R = typename S::Region;

  GameState(const S& system, std::size_t horizon) : system_(&system), horizon_(horizon) {
    if (horizon == 0) throw Error("horizon must be at least 1");
  }

  const Transcript<R>& transcript() const { return transcript_; }
  std::size_t horizon() const { return horizon_; }
  std::size_t round() const { return transcript_.rounds.size(); }
  bool finished() const { return finished_; }
  /// EMPTY's move awaiting NONEMPTY's answer.
  const std::optional<R>& pending() const { return pending_; }
  const std::vector<R>& history() const { return history_; }

  /// Records EMPTY's move; false (and the game ends) if illegal.
  bool play_empty(const R& U) {
    expect(!finished_ && !pending_, "EMPTY is not to move");
    if (auto why = empty_violation(U)) return forfeit(Player::Empty, *why);
    pending_ = U;
    history_.push_back(U);
    return true;
  }

  /// Checks EMPTY's move without recording anything.
  std::optional<std::string> empty_violation(const R& U) const {
    if (!system_->is_valid(U)) return "not a region of " + system_->name();
    if (transcript_.rounds.empty()) {
      if (!system_->is_subset(U, system_->root())) return "not inside the whole space";
    } else if (!system_->is_subset(U, transcript_.rounds.back().V)) {
      return "not a subset of previous V";
    }
    return std::nullopt;
  }

  bool play_nonempty(const R& V) {
    expect(!finished_ && pending_, "NONEMPTY is not to move");
    if (!system_->is_valid(V) || !system_->is_subset(V, *pending_)) return forfeit(Player::Nonempty, "not a subset of U");
    transcript_.rounds.push_back({*pending_, V});
    history_.push_back(V);
    pending_.reset();
    if (transcript_.rounds.size() == horizon_) settle();
    return true;
  }

  bool forfeit(Player mover, std::string reason) {
    transcript_.outcome = IllegalMove{round(), mover, std::move(reason)};
    finished_ = true;
    pending_.reset();
    return false;
  }

 private:
  static void expect(bool ok, const char* what) {
    if (!ok) throw Error(what);
  }

  void settle() {
    std::vector<R> vs;
    for (const auto& r : transcript_.rounds) vs.push_back(r.V);
    if (auto w = system_->witness_point(std::span<const R>(vs))) transcript_.outcome = NonemptyCertified{*w};
    else transcript_.outcome = Undetermined{horizon_};
    finished_ = true;
  }

  const S* system_;
  std::size_t horizon_;
  Transcript<R> transcript_;
  std::vector<R> history_;
  std::optional<R> pending_;
  bool finished_ = false;
};

/// Plays to the horizon. A strategy that throws forfeits the round.
template <RegionSystem S>
Transcript<typename S::Region> run_game(const S& system, const Strategy<typename S::Region>& empty_player,
                                        const Strategy<typename S::Region>& nonempty_player, std::size_t horizon) {
  using R = typename S::Region;
  GameState<S> game(system, horizon);
  while (!game.finished()) {
    const std::span<const R> h(game.history());
    std::optional<R> U;
    try {
      U = empty_player(h);
    } catch (const std::exception& e) {
      game.forfeit(Player::Empty, std::string("strategy failed: ") + e.what());
      break;
    }
    if (!game.play_empty(*U)) break;
    const std::span<const R> h2(game.history());
    std::optional<R> V;
    try {
      V = nonempty_player(h2);
    } catch (const std::exception& e) {
      game.forfeit(Player::Nonempty, std::string("strategy failed: ") + e.what());
      break;
    }
    if (!game.play_nonempty(*V)) break;
  }
  return game.transcript();
}

/// Every U(n) contains V(n), which contains U(n+1). Returns the first index
/// into the flattened chain where nesting breaks, or nullopt.
template <RegionSystem S>
std::optional<std::size_t> nested_chain_violation(const S& system, const Transcript<typename S::Region>& t) {
  const auto chain = flatten(t.rounds);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!system.is_valid(chain[i])) return i;
    if (i > 0 && !system.is_subset(chain[i], chain[i - 1])) return i;
  }
  return std::nullopt;
}

// ---- ready-made players ----

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform draw in [0, n) by rejection on raw engine output, so results do
/// not depend on the standard library's distribution implementation.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % n;
}

/// Seeded EMPTY: refines the last V (or the whole space) with a per-round
/// seed derived from (seed, round), so a move depends on nothing else. If
/// the region cannot be refined, replays it unchanged.
template <RegionSystem S>
Strategy<typename S::Region> random_empty_player(const S& system, std::uint64_t seed) {
  using R = typename S::Region;
  return [&system, seed](std::span<const R> history) {
    const std::size_t round = history.size() / 2;
    const R base = history.empty() ? system.root() : history.back();
    auto next = system.sample_refinement(base, splitmix64(seed + round));
    return next ? *next : base;
  };
}

/// NONEMPTY answering each U with a region whose closure lies inside it.
/// Throws Error for systems without such an oracle.
template <RegionSystem S>
Strategy<typename S::Region> closure_refinement_strategy(const S& system) {
  using R = typename S::Region;
  if constexpr (ClosedRefinementSystem<S>) {
    return [&system](std::span<const R> history) { return system.closed_refinement(history.back()); };
  } else {
    throw Error("closure refinement is unsupported on the " + system.name() + " system");
  }
}

/// Replays fixed moves; past the script, repeats the last V (EMPTY) or U.
template <class R>
Strategy<R> scripted_player(std::vector<R> moves) {
  return [moves = std::move(moves)](std::span<const R> history) {
    const std::size_t i = history.size() / 2;
    if (i < moves.size()) return moves[i];
    if (history.empty()) throw Error("empty script");
    return history.back();
  };
}

// ---- serialization ----

inline nlohmann::ordered_json outcome_json(const Outcome& o) {
  nlohmann::ordered_json j;
  if (const auto* c = std::get_if<NonemptyCertified>(&o)) {
    j["outcome"] = "NonemptyCertified";
    j["witness"] = c->witness;
  } else if (const auto* u = std::get_if<Undetermined>(&o)) {
    j["outcome"] = "Undetermined";
    j["horizon"] = u->horizon;
  } else {
    const auto& m = std::get<IllegalMove>(o);
    j["outcome"] = "IllegalMove";
    j["round"] = m.round;
    j["mover"] = player_name(m.mover);
    j["reason"] = m.reason;
  }
  return j;
}

inline std::string outcome_tag(const Outcome& o) {
  if (std::holds_alternative<NonemptyCertified>(o)) return "NonemptyCertified";
  if (std::holds_alternative<Undetermined>(o)) return "Undetermined";
  return "IllegalMove";
}

template <RegionSystem S>
nlohmann::ordered_json round_json(const S& system, std::size_t n, const Round<typename S::Region>& r) {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["U"] = system.format(r.U);
  j["V"] = system.format(r.V);
  return j;
}

/// One JSON object per round, then the outcome line; '\n'-terminated.
template <RegionSystem S>
std::string transcript_json_lines(const S& system, const Transcript<typename S::Region>& t) {
  std::string out;
  for (std::size_t n = 0; n < t.rounds.size(); ++n) out += round_json(system, n, t.rounds[n]).dump() + "\n";
  out += outcome_json(t.outcome).dump() + "\n";
  return out;
}

}  // namespace bmlab

#endif  // BMLAB_GAME_HPP
