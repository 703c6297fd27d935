#ifndef BMLAB_SERVICE_HPP
#define BMLAB_SERVICE_HPP

// HTTP+JSON front end for game sessions.
//
//   POST /session                 {system, horizon, seed, sigma} -> {id, state}
//   POST /session/{id}/move       {u}  -> {n, u, v, audit, outcome}
//   GET  /session/{id}/transcript      -> [ {"n","U","V"}..., {"outcome"...} ]
//   GET  /session/{id}                 -> state
//
// Every field of the create body is optional. A move without u lets the
// session's seeded player choose EMPTY's move. Errors are {"error", "reason"}
// with 400 for bad requests and illegal moves, 404 for unknown sessions.

#include <memory>
#include <string>
#include <string_view>

#include "bmlab/session.hpp"

namespace bmlab {

struct HttpReply {
  int status = 200;
  nlohmann::ordered_json body;
};

class SessionService {
 public:
  explicit SessionService(SessionStore& store) : store_(&store) {}

  /// Pure request handler; the socket layer only forwards to it.
  HttpReply handle(std::string_view method, std::string_view path, std::string_view body);

 private:
  HttpReply create(std::string_view body);
  HttpReply move(const std::string& id, std::string_view body);

  SessionStore* store_;
};

/// "host:port" or ":port" / "port" (host defaults to 127.0.0.1).
std::pair<std::string, int> parse_bind(std::string_view bind);

/// Blocking HTTP server around a SessionService.
class HttpServer {
 public:
  explicit HttpServer(SessionService& service);
  ~HttpServer();
  /// Binds; port 0 picks a free port. Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Serves until stop().
  bool run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace bmlab

#endif  // BMLAB_SERVICE_HPP
