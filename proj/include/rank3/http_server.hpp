#ifndef RANK3_HTTP_SERVER_HPP
#define RANK3_HTTP_SERVER_HPP

// HTTP front end for GameService.

#include <memory>
#include <string>

#include "httplib.h"
#include "rank3/service.hpp"

namespace rank3 {

// Routes every endpoint to `service`; null if `static_dir` cannot be mounted.
inline std::unique_ptr<httplib::Server> make_http_server(GameService& service, const std::string& static_dir = {}) {
  auto server = std::make_unique<httplib::Server>();
  if (!static_dir.empty() && !server->set_mount_point("/", static_dir)) return nullptr;
  auto route = [&service](const httplib::Request& req, httplib::Response& res) {
    const ServiceResponse r = service.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server->Get(R"(/presets)", route);
  server->Post(R"(/games)", route);
  server->Get(R"(/games/[^/]+)", route);
  server->Get(R"(/games/[^/]+/analysis)", route);
  server->Post(R"(/games/[^/]+/(move|engine-move))", route);
  return server;
}

// Blocks until the server stops.
inline bool serve_http(GameService& service, const std::string& host, int port, const std::string& static_dir = {}) {
  auto server = make_http_server(service, static_dir);
  return server && server->listen(host, port);
}

}  // namespace rank3

#endif  // RANK3_HTTP_SERVER_HPP
