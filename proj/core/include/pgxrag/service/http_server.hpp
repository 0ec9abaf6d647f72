#pragma once

#include <memory>
#include <string>

#include "pgxrag/service/api.hpp"

namespace pgxrag {

// HTTP front end for ServiceApi. Requests run on the server's worker pool.
class HttpServer {
 public:
  explicit HttpServer(ServiceApi& api);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds to host:port (port 0 picks a free port) and returns the bound port.
  // Throws IoFailure when the address is unavailable.
  int bind(const std::string& host, int port);
  // Serves until stop(); call after bind().
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace pgxrag
