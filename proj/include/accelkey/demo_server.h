#ifndef ACCELKEY_DEMO_SERVER_H_
#define ACCELKEY_DEMO_SERVER_H_

#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "accelkey/adapters.h"
#include "accelkey/protocol.h"

namespace accelkey {

struct ServerOptions {
  std::string address = "127.0.0.1";
  // 0 picks a free port.
  uint16_t port = 8080;
  // Browser UI assets; empty serves a placeholder page at "/".
  std::filesystem::path static_dir;
  JitterConfig jitter;
};

// HTTP + WebSocket front end. WebSocket upgrades on any path carry the JSON
// protocol, one ProtocolSession per connection. Plain GETs serve
// /api/catalog and the static assets.
class DemoServer {
 public:
  DemoServer(DatasetCatalog catalog, ServerOptions options);
  ~DemoServer();

  DemoServer(const DemoServer&) = delete;
  DemoServer& operator=(const DemoServer&) = delete;

  // Binds and starts accepting in the background. Returns the bound port.
  uint16_t Start();
  // Blocks until Stop() is called from another thread.
  void Wait();
  // Closes the listener and all live connections, then waits for the
  // connection threads to finish.
  void Stop();

 private:
  struct Impl;
  struct Connection;

  void AcceptLoop();
  void Serve(std::unique_ptr<Connection> connection);

  const DatasetCatalog catalog_;
  const ServerOptions options_;
  std::unique_ptr<Impl> impl_;

  std::mutex mutex_;
  std::condition_variable idle_;
  std::set<int> live_;
  size_t active_ = 0;
  bool stopped_ = false;
  std::thread accept_thread_;
};

}  // namespace accelkey

#endif  // ACCELKEY_DEMO_SERVER_H_
