#include "bmlab/session.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

namespace bmlab {

std::uint64_t default_seed() {
  const char* env = std::getenv("BMGL_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used == std::string_view(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw Error("BMGL_SEED must be a non-negative integer");
}

const BaireSystem& baire_system() {
  static const BaireSystem system;
  return system;
}

namespace {

SessionConfig checked(SessionConfig c) {
  if (c.system != "baire") throw Error("unsupported system '" + c.system + "': only baire has a coded pi-base");
  if (c.horizon == 0) throw Error("horizon must be at least 1");
  const auto ids = sigma_ids();
  if (std::find(ids.begin(), ids.end(), c.sigma) == ids.end()) throw Error("unknown sigma '" + c.sigma + "'");
  return c;
}

}  // namespace

GameSession::GameSession(std::string id, SessionConfig config)
    : id_(std::move(id)),
      config_(checked(std::move(config))),
      game_(baire_system(), config_.horizon),
      sigma_(sigma_by_id(config_.sigma)),
      machine_(as_strategy(galvin_two_tactic(BaireCodedBase{}, sigma_))),
      random_empty_(random_empty_player(baire_system(), config_.seed)) {}

MoveResult GameSession::move(const std::optional<BaireRegion>& u) {
  MoveResult r;
  r.n = game_.round();
  if (game_.finished()) {
    r.reason = "game is over";
    return r;
  }
  r.u = u ? *u : random_empty_(std::span<const BaireRegion>(game_.history()));
  if (auto why = game_.empty_violation(r.u)) {
    r.reason = *why;
    return r;
  }
  game_.play_empty(r.u);
  r.v = machine_(std::span<const BaireRegion>(game_.history()));
  game_.play_nonempty(r.v);
  r.accepted = true;
  if (r.n >= 2) {
    const auto a = audit();
    r.audit = round_audit_json(a.rounds.at(r.n - 2));
  }
  if (game_.finished()) r.outcome = outcome_json(game_.transcript().outcome);
  return r;
}

DecodeAudit GameSession::audit() const { return audit_play(BaireCodedBase{}, sigma_, game_.transcript()); }

nlohmann::ordered_json GameSession::state_json() const {
  nlohmann::ordered_json j;
  j["id"] = id_;
  j["system"] = config_.system;
  j["horizon"] = config_.horizon;
  j["seed"] = config_.seed;
  j["sigma"] = config_.sigma;
  j["round"] = game_.round();
  j["finished"] = game_.finished();
  const auto& rounds = game_.transcript().rounds;
  j["last_v"] = format_baire(rounds.empty() ? baire_system().root() : rounds.back().V);
  j["outcome"] = game_.finished() ? outcome_json(game_.transcript().outcome) : nlohmann::ordered_json();
  return j;
}

nlohmann::ordered_json GameSession::transcript_json() const {
  auto arr = nlohmann::ordered_json::array();
  const auto& t = game_.transcript();
  for (std::size_t n = 0; n < t.rounds.size(); ++n) arr.push_back(round_json(baire_system(), n, t.rounds[n]));
  if (game_.finished()) arr.push_back(outcome_json(t.outcome));
  return arr;
}

// ---- store ----

SessionStore::SessionStore(std::optional<std::filesystem::path> state_dir) : state_dir_(std::move(state_dir)) {
  if (!state_dir_) return;
  std::filesystem::create_directories(*state_dir_);
  std::vector<std::filesystem::path> logs;
  for (const auto& entry : std::filesystem::directory_iterator(*state_dir_))
    if (entry.path().extension() == ".jsonl") logs.push_back(entry.path());
  std::sort(logs.begin(), logs.end());
  for (const auto& file : logs) replay(file);
}

void SessionStore::replay(const std::filesystem::path& file) {
  std::ifstream in(file);
  std::string line;
  if (!std::getline(in, line)) return;
  const auto head = nlohmann::json::parse(line);
  SessionConfig c;
  c.system = head.at("system").get<std::string>();
  c.horizon = head.at("horizon").get<std::size_t>();
  c.seed = head.at("seed").get<std::uint64_t>();
  c.sigma = head.at("sigma").get<std::string>();
  const auto id = head.at("id").get<std::string>();
  auto e = std::make_unique<Entry>();
  e->session = std::make_unique<GameSession>(id, c);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto rec = nlohmann::json::parse(line);
    const auto r = e->session->move(parse_baire(rec.at("U").get<std::string>()));
    if (!r.accepted) throw Error("session log " + file.string() + " does not replay: " + r.reason);
  }
  e->logged_rounds = e->session->transcript().rounds.size();
  if (id.size() > 1 && id[0] == 's') next_ = std::max<std::size_t>(next_, std::stoull(id.substr(1)) + 1);
  sessions_.emplace(id, std::move(e));
}

std::string SessionStore::create(const SessionConfig& config) {
  std::lock_guard lock(mutex_);
  const std::string id = "s" + std::to_string(next_);
  auto e = std::make_unique<Entry>();
  e->session = std::make_unique<GameSession>(id, config);
  ++next_;
  if (state_dir_) {
    nlohmann::ordered_json head;
    head["id"] = id;
    head["system"] = config.system;
    head["horizon"] = config.horizon;
    head["seed"] = config.seed;
    head["sigma"] = config.sigma;
    std::ofstream(*state_dir_ / (id + ".jsonl")) << head.dump() << "\n";
  }
  sessions_.emplace(id, std::move(e));
  return id;
}

SessionStore::Entry* SessionStore::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  const auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second.get();
}

void SessionStore::flush_log(Entry& e) {
  const auto& rounds = e.session->transcript().rounds;
  if (e.logged_rounds == rounds.size()) return;
  std::ofstream out(*state_dir_ / (e.session->id() + ".jsonl"), std::ios::app);
  for (; e.logged_rounds < rounds.size(); ++e.logged_rounds)
    out << round_json(baire_system(), e.logged_rounds, rounds[e.logged_rounds]).dump() << "\n";
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

}  // namespace bmlab
