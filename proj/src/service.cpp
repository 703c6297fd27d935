#include "bmlab/service.hpp"

#include <charconv>

#include "httplib.h"

namespace bmlab {

namespace {

HttpReply error(int status, std::string error, std::string reason) {
  nlohmann::ordered_json j;
  j["error"] = std::move(error);
  j["reason"] = std::move(reason);
  return {status, std::move(j)};
}

std::vector<std::string_view> path_parts(std::string_view path) {
  std::vector<std::string_view> parts;
  while (!path.empty()) {
    const auto slash = path.find('/');
    if (slash != 0) parts.push_back(path.substr(0, slash));
    if (slash == std::string_view::npos) break;
    path.remove_prefix(slash + 1);
  }
  return parts;
}

nlohmann::json parse_body(std::string_view body) {
  if (body.find_first_not_of(" \t\r\n") == std::string_view::npos) return nlohmann::json::object();
  auto j = nlohmann::json::parse(body);
  if (!j.is_object()) throw Error("request body must be a JSON object");
  return j;
}

BaireRegion region_from_json(const nlohmann::json& u) {
  if (u.is_string()) return parse_baire(u.get<std::string>());
  if (u.is_array()) {
    BaireRegion r;
    for (const auto& x : u) {
      if (!x.is_number_unsigned()) throw Error("u entries must be non-negative integers");
      r.seq.emplace_back(x.get<std::uint64_t>());
    }
    return r;
  }
  throw Error("u must be a region literal or an array of naturals");
}

}  // namespace

HttpReply SessionService::handle(std::string_view method, std::string_view path, std::string_view body) {
  const auto parts = path_parts(path);
  if (parts.empty() || parts[0] != "session") return error(404, "not found", std::string(path));
  if (parts.size() == 1) {
    if (method != "POST") return error(405, "method not allowed", std::string(method));
    return create(body);
  }
  const std::string id(parts[1]);
  if (parts.size() == 3 && parts[2] == "move") {
    if (method != "POST") return error(405, "method not allowed", std::string(method));
    return move(id, body);
  }
  if (method != "GET") return error(405, "method not allowed", std::string(method));
  if (parts.size() > 3 || (parts.size() == 3 && parts[2] != "transcript")) return error(404, "not found", std::string(path));
  HttpReply reply;
  const bool want_transcript = parts.size() == 3;
  const bool found = store_->with_session(id, [&](GameSession& s) {
    reply.body = want_transcript ? s.transcript_json() : s.state_json();
  });
  if (!found) return error(404, "unknown session", id);
  return reply;
}

HttpReply SessionService::create(std::string_view body) {
  SessionConfig c;
  c.seed = default_seed();
  try {
    const auto j = parse_body(body);
    if (j.contains("system")) c.system = j.at("system").get<std::string>();
    if (j.contains("horizon")) {
      if (!j.at("horizon").is_number_unsigned()) throw Error("horizon must be a positive integer");
      c.horizon = j.at("horizon").get<std::size_t>();
    }
    if (j.contains("seed")) {
      if (!j.at("seed").is_number_unsigned()) throw Error("seed must be a non-negative integer");
      c.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("sigma")) c.sigma = j.at("sigma").get<std::string>();
    const auto id = store_->create(c);
    HttpReply reply;
    store_->with_session(id, [&](GameSession& s) {
      reply.body["id"] = id;
      reply.body["state"] = s.state_json();
    });
    return reply;
  } catch (const nlohmann::json::exception& e) {
    return error(400, "bad request", e.what());
  } catch (const Error& e) {
    return error(400, "bad request", e.what());
  }
}

HttpReply SessionService::move(const std::string& id, std::string_view body) {
  std::optional<BaireRegion> u;
  try {
    const auto j = parse_body(body);
    if (j.contains("u") && !j.at("u").is_null()) u = region_from_json(j.at("u"));
  } catch (const nlohmann::json::exception& e) {
    return error(400, "bad request", e.what());
  } catch (const Error& e) {
    return error(400, "bad request", e.what());
  }
  HttpReply reply;
  const bool found = store_->with_session(id, [&](GameSession& s) {
    const auto r = s.move(u);
    if (!r.accepted) {
      reply = error(400, "illegal move", r.reason);
      reply.body["n"] = r.n;
      return;
    }
    reply.body["n"] = r.n;
    reply.body["u"] = format_baire(r.u);
    reply.body["v"] = format_baire(r.v);
    reply.body["audit"] = r.audit;
    reply.body["outcome"] = r.outcome;
  });
  if (!found) return error(404, "unknown session", id);
  return reply;
}

std::pair<std::string, int> parse_bind(std::string_view bind) {
  std::string host = "127.0.0.1";
  std::string_view port = bind;
  if (const auto colon = bind.rfind(':'); colon != std::string_view::npos) {
    if (colon > 0) host = std::string(bind.substr(0, colon));
    port = bind.substr(colon + 1);
  }
  int p = -1;
  const auto [end, ec] = std::from_chars(port.data(), port.data() + port.size(), p);
  if (port.empty() || ec != std::errc{} || end != port.data() + port.size() || p < 0 || p > 65535)
    throw Error("bad bind address '" + std::string(bind) + "'");
  return {host, p};
}

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(SessionService& service) : impl_(std::make_unique<Impl>()) {
  auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
    const auto reply = service.handle(req.method, req.path, req.body);
    res.status = reply.status;
    res.set_content(reply.body.dump(), "application/json");
  };
  impl_->server.Get(R"(/.*)", forward);
  impl_->server.Post(R"(/.*)", forward);
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::run() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

}  // namespace bmlab
