#ifndef BMLAB_SESSION_HPP
#define BMLAB_SESSION_HPP

// Interactive games against the Galvin 2-tactic: a human (or the seeded
// random player) moves for EMPTY, the machine answers. Shared by the
// terminal loop and the HTTP service.

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "bmlab/galvin.hpp"

namespace bmlab {

struct SessionConfig {
  std::string system = "baire";
  std::size_t horizon = 16;
  std::uint64_t seed = 0;
  std::string sigma = "closure";
};

/// Seed from BMGL_SEED, else 0.
std::uint64_t default_seed();

struct MoveResult {
  bool accepted = false;
  std::string reason;  // why the move was refused
  std::size_t n = 0;
  BaireRegion u;
  BaireRegion v;
  nlohmann::ordered_json audit;    // null before round 2
  nlohmann::ordered_json outcome;  // null while the game runs
};

class GameSession {
 public:
  /// Throws Error on an unsupported system or sigma, or horizon 0.
  GameSession(std::string id, SessionConfig config);

  /// Plays u for EMPTY (the seeded random move when u is empty) and the
  /// machine's reply. Refused moves leave the state untouched.
  MoveResult move(const std::optional<BaireRegion>& u);

  const std::string& id() const { return id_; }
  const SessionConfig& config() const { return config_; }
  const Transcript<BaireRegion>& transcript() const { return game_.transcript(); }
  bool finished() const { return game_.finished(); }

  nlohmann::ordered_json state_json() const;
  /// The JSON-lines records as an array; the outcome record comes last once the game ends.
  nlohmann::ordered_json transcript_json() const;
  /// Audit of the whole play so far.
  DecodeAudit audit() const;

 private:
  std::string id_;
  SessionConfig config_;
  GameState<BaireSystem> game_;
  Strategy<BaireRegion> sigma_;
  Strategy<BaireRegion> machine_;
  Strategy<BaireRegion> random_empty_;
};

const BaireSystem& baire_system();

/// Sessions keyed "s1", "s2", ... With a state directory every session keeps
/// an append-only log there and is replayed on construction.
class SessionStore {
 public:
  explicit SessionStore(std::optional<std::filesystem::path> state_dir = std::nullopt);

  std::string create(const SessionConfig& config);

  /// Runs f on the session under its own lock; false if the id is unknown.
  template <class F>
  bool with_session(const std::string& id, F&& f) {
    Entry* e = find(id);
    if (!e) return false;
    std::lock_guard lock(e->mutex);
    f(*e->session);
    if (state_dir_) flush_log(*e);
    return true;
  }

  std::size_t size() const;

 private:
  struct Entry {
    std::unique_ptr<GameSession> session;
    std::mutex mutex;
    std::size_t logged_rounds = 0;
  };

  Entry* find(const std::string& id);
  void flush_log(Entry& e);
  void replay(const std::filesystem::path& file);

  std::optional<std::filesystem::path> state_dir_;
  mutable std::mutex mutex_;
  std::map<std::string, std::unique_ptr<Entry>> sessions_;
  std::size_t next_ = 1;
};

}  // namespace bmlab

#endif  // BMLAB_SESSION_HPP
