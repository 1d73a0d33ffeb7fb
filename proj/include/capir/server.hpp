#pragma once

#include <memory>
#include <string>

#include "capir/session.hpp"

namespace capir {

// HTTP transport for the session protocol:
//   GET  /api/levels              -> {"levels": [...]}
//   POST /api/sessions            create-request -> snapshot
//   GET  /api/sessions/<id>       -> snapshot
//   POST /api/act                 act-request -> act-response
// Errors are returned as {"code", "message"} with a matching HTTP status.
class HttpServer {
 public:
  HttpServer(SessionManager& sessions, LevelRegistry& levels);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Blocks until stop(). Returns false if the port cannot be bound.
  bool listen(const std::string& host, int port);
  // Binds an ephemeral port and returns it (or -1); then call run().
  int bind_any_port(const std::string& host);
  bool run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace capir
