#include "accelkey/demo_server.h"

#include <boost/asio/connect.hpp>
#include <boost/asio/ip/tcp.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>
#include <sys/socket.h>

#include <fstream>
#include <sstream>

namespace accelkey {

namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
namespace net = boost::asio;
using tcp = net::ip::tcp;

namespace {

constexpr char kPlaceholderPage[] =
    "<!doctype html><title>AccelKey demo</title>"
    "<p>The browser UI is not installed. Start the server with --static-dir "
    "pointing at the built UI, or speak the JSON protocol over a WebSocket "
    "on this port.</p>\n";

std::string_view ContentType(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".html" || ext == ".htm") return "text/html; charset=utf-8";
  if (ext == ".js" || ext == ".mjs") return "text/javascript; charset=utf-8";
  if (ext == ".css") return "text/css; charset=utf-8";
  if (ext == ".json") return "application/json";
  if (ext == ".svg") return "image/svg+xml";
  if (ext == ".png") return "image/png";
  if (ext == ".ico") return "image/x-icon";
  return "application/octet-stream";
}

http::response<http::string_body> MakeResponse(
    const http::request<http::string_body>& request, http::status status,
    std::string_view content_type, std::string body) {
  http::response<http::string_body> response{status, request.version()};
  response.set(http::field::content_type,
               beast::string_view(content_type.data(), content_type.size()));
  response.keep_alive(false);
  response.body() = std::move(body);
  response.prepare_payload();
  return response;
}

}  // namespace

struct DemoServer::Impl {
  net::io_context io;
  tcp::acceptor acceptor{io};
  uint16_t port = 0;
};

struct DemoServer::Connection {
  explicit Connection(net::io_context& io) : socket(io) {}
  tcp::socket socket;
};

DemoServer::DemoServer(DatasetCatalog catalog, ServerOptions options)
    : catalog_(std::move(catalog)),
      options_(std::move(options)),
      impl_(std::make_unique<Impl>()) {}

DemoServer::~DemoServer() { Stop(); }

uint16_t DemoServer::Start() {
  const tcp::endpoint endpoint{net::ip::make_address(options_.address),
                               options_.port};
  impl_->acceptor.open(endpoint.protocol());
  impl_->acceptor.set_option(net::socket_base::reuse_address(true));
  impl_->acceptor.bind(endpoint);
  impl_->acceptor.listen();
  impl_->port = impl_->acceptor.local_endpoint().port();
  accept_thread_ = std::thread([this] { AcceptLoop(); });
  return impl_->port;
}

void DemoServer::AcceptLoop() {
  for (;;) {
    auto connection = std::make_unique<Connection>(impl_->io);
    boost::system::error_code ec;
    impl_->acceptor.accept(connection->socket, ec);
    std::unique_lock lock(mutex_);
    if (stopped_) return;
    if (ec) continue;
    live_.insert(connection->socket.native_handle());
    ++active_;
    lock.unlock();
    std::thread([this, c = std::move(connection)]() mutable {
      Serve(std::move(c));
    }).detach();
  }
}

void DemoServer::Wait() {
  std::unique_lock lock(mutex_);
  idle_.wait(lock, [this] { return stopped_; });
}

void DemoServer::Stop() {
  {
    std::lock_guard lock(mutex_);
    if (stopped_) return;
    stopped_ = true;
    for (int fd : live_) ::shutdown(fd, SHUT_RDWR);
  }
  idle_.notify_all();
  if (accept_thread_.joinable()) {
    // Wake the blocking accept with a throwaway connection.
    boost::system::error_code ec;
    tcp::socket poke(impl_->io);
    poke.connect({net::ip::make_address(options_.address), impl_->port}, ec);
    accept_thread_.join();
  }
  boost::system::error_code ec;
  impl_->acceptor.close(ec);
  std::unique_lock lock(mutex_);
  idle_.wait(lock, [this] { return active_ == 0; });
}

void DemoServer::Serve(std::unique_ptr<Connection> connection) {
  tcp::socket& socket = connection->socket;
  const int fd = socket.native_handle();
  try {
    beast::flat_buffer buffer;
    http::request<http::string_body> request;
    http::read(socket, buffer, request);
    if (websocket::is_upgrade(request)) {
      websocket::stream<tcp::socket&> ws(socket);
      ws.accept(request);
      ProtocolSession protocol(catalog_, options_.jitter);
      for (;;) {
        beast::flat_buffer incoming;
        ws.read(incoming);
        const std::string reply =
            protocol.HandleText(beast::buffers_to_string(incoming.data()));
        ws.text(true);
        ws.write(net::buffer(reply));
      }
    }

    std::string target(request.target());
    if (const auto query = target.find('?'); query != std::string::npos) {
      target.resize(query);
    }
    http::response<http::string_body> response;
    if (request.method() != http::verb::get) {
      response = MakeResponse(request, http::status::method_not_allowed,
                              "text/plain", "GET only\n");
    } else if (target == "/api/catalog") {
      nlohmann::json body = {{"datasets", catalog_.DatasetNames()},
                             {"layouts", catalog_.LayoutNames()}};
      response = MakeResponse(request, http::status::ok, "application/json",
                              body.dump());
    } else {
      if (target == "/") target = "/index.html";
      std::filesystem::path relative =
          std::filesystem::path(target.substr(1)).lexically_normal();
      const bool escapes = relative.empty() || relative.is_absolute() ||
                           *relative.begin() == "..";
      std::ifstream file;
      std::error_code ec;
      if (!escapes && !options_.static_dir.empty() &&
          std::filesystem::is_regular_file(options_.static_dir / relative,
                                           ec)) {
        file.open(options_.static_dir / relative, std::ios::binary);
      }
      if (file.is_open()) {
        std::ostringstream body;
        body << file.rdbuf();
        response = MakeResponse(request, http::status::ok,
                                ContentType(relative), body.str());
      } else if (target == "/index.html") {
        response = MakeResponse(request, http::status::ok,
                                "text/html; charset=utf-8", kPlaceholderPage);
      } else {
        response = MakeResponse(request, http::status::not_found,
                                "text/plain", "not found\n");
      }
    }
    http::write(socket, response);
  } catch (const std::exception&) {
    // Connection dropped or closed; its session goes with it.
  }
  std::lock_guard lock(mutex_);
  live_.erase(fd);
  boost::system::error_code ec;
  socket.shutdown(tcp::socket::shutdown_both, ec);
  socket.close(ec);
  connection.reset();
  --active_;
  idle_.notify_all();
}

}  // namespace accelkey
