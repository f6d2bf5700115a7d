// Copyright 2026 The Mascot Robot System Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mascot/server.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <csignal>
#include <deque>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <boost/asio/signal_set.hpp>
#include <boost/asio/strand.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>

#include "mascot/frames.hpp"

namespace mascot
{

namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
namespace net = boost::asio;
using tcp = net::ip::tcp;

namespace
{

using Frame = std::shared_ptr<const std::string>;

class WsSession;

struct Command
{
  ClientCommand command;
  std::weak_ptr<WsSession> origin;
};

// State shared between the simulation thread and network workers. Only
// queued commands and serialized frames cross this boundary.
struct Hub
{
  std::mutex mutex;
  std::vector<Command> commands;
  std::vector<std::weak_ptr<WsSession>> sessions;
  std::string snapshot;
  std::size_t frame_buffer{64};

  void push(Command c)
  {
    std::lock_guard lock(mutex);
    commands.push_back(std::move(c));
  }

  std::vector<Command> drain()
  {
    std::lock_guard lock(mutex);
    return std::exchange(commands, {});
  }

  std::string current_snapshot()
  {
    std::lock_guard lock(mutex);
    return snapshot;
  }
};

class WsSession : public std::enable_shared_from_this<WsSession>
{
public:
  WsSession(tcp::socket && socket, std::shared_ptr<Hub> hub)
  : ws_(std::move(socket)), hub_(std::move(hub)) {}

  void start(http::request<http::string_body> req)
  {
    ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.text(true);
    ws_.async_accept(
      req, beast::bind_front_handler(&WsSession::on_accept, shared_from_this()));
  }

  // Thread-safe: hops onto the session's strand.
  void send(Frame frame)
  {
    net::post(
      ws_.get_executor(), [self = shared_from_this(), frame = std::move(frame)]() mutable {
        self->enqueue(std::move(frame));
      });
  }

private:
  void on_accept(beast::error_code ec)
  {
    if (ec) {return;}
    {
      std::lock_guard lock(hub_->mutex);
      hub_->sessions.push_back(weak_from_this());
    }
    do_read();
  }

  void do_read()
  {
    ws_.async_read(buffer_, beast::bind_front_handler(&WsSession::on_read, shared_from_this()));
  }

  void on_read(beast::error_code ec, std::size_t)
  {
    if (ec) {
      closed_ = true;
      return;
    }
    const auto text = beast::buffers_to_string(buffer_.data());
    buffer_.consume(buffer_.size());
    try {
      hub_->push({parse_client_frame(text), weak_from_this()});
    } catch (const FrameError & e) {
      enqueue(std::make_shared<const std::string>(error_frame("bad_frame", e.what())));
    }
    do_read();
  }

  void enqueue(Frame frame)
  {
    if (closed_) {return;}
    outbox_.push_back(std::move(frame));
    // The frame being written stays at the front; only queued ones are dropped.
    while (outbox_.size() > hub_->frame_buffer + (writing_ ? 1 : 0)) {
      outbox_.erase(outbox_.begin() + (writing_ ? 1 : 0));
    }
    if (!writing_) {do_write();}
  }

  void do_write()
  {
    writing_ = true;
    ws_.async_write(
      net::buffer(*outbox_.front()),
      beast::bind_front_handler(&WsSession::on_write, shared_from_this()));
  }

  void on_write(beast::error_code ec, std::size_t)
  {
    writing_ = false;
    if (ec) {
      closed_ = true;
      outbox_.clear();
      return;
    }
    outbox_.pop_front();
    if (!outbox_.empty()) {do_write();}
  }

  websocket::stream<beast::tcp_stream> ws_;
  std::shared_ptr<Hub> hub_;
  beast::flat_buffer buffer_;
  std::deque<Frame> outbox_;
  bool writing_{false};
  bool closed_{false};
};

class HttpSession : public std::enable_shared_from_this<HttpSession>
{
public:
  HttpSession(tcp::socket && socket, std::shared_ptr<Hub> hub)
  : stream_(std::move(socket)), hub_(std::move(hub)) {}

  void start()
  {
    net::dispatch(
      stream_.get_executor(),
      beast::bind_front_handler(&HttpSession::do_read, shared_from_this()));
  }

private:
  void do_read()
  {
    req_ = {};
    stream_.expires_after(std::chrono::seconds(30));
    http::async_read(
      stream_, buffer_, req_, beast::bind_front_handler(&HttpSession::on_read, shared_from_this()));
  }

  void on_read(beast::error_code ec, std::size_t)
  {
    if (ec) {
      beast::error_code ignored;
      stream_.socket().shutdown(tcp::socket::shutdown_send, ignored);
      return;
    }
    if (websocket::is_upgrade(req_)) {
      if (req_.target() == "/ws") {
        stream_.expires_never();
        std::make_shared<WsSession>(stream_.release_socket(), hub_)->start(std::move(req_));
        return;
      }
    }
    respond();
  }

  void respond()
  {
    auto res = std::make_shared<http::response<http::string_body>>();
    res->version(req_.version());
    res->keep_alive(req_.keep_alive());
    res->set(http::field::server, "mascotd");
    if (req_.method() == http::verb::get && req_.target() == "/state") {
      res->result(http::status::ok);
      res->set(http::field::content_type, "application/json");
      res->body() = hub_->current_snapshot();
    } else if (req_.target() == "/state") {
      res->result(http::status::method_not_allowed);
      res->set(http::field::content_type, "application/json");
      res->body() = error_frame("method_not_allowed", "use GET /state");
    } else {
      res->result(http::status::not_found);
      res->set(http::field::content_type, "application/json");
      res->body() = error_frame("not_found", "unknown path");
    }
    res->prepare_payload();
    http::async_write(
      stream_, *res, [self = shared_from_this(), res](beast::error_code ec, std::size_t) {
        if (ec || !res->keep_alive()) {
          beast::error_code ignored;
          self->stream_.socket().shutdown(tcp::socket::shutdown_send, ignored);
          return;
        }
        self->do_read();
      });
  }

  beast::tcp_stream stream_;
  beast::flat_buffer buffer_;
  http::request<http::string_body> req_;
  std::shared_ptr<Hub> hub_;
};

}  // namespace

struct Server::Impl
{
  std::unique_ptr<MascotSystem> system;
  ServerOptions options;
  std::shared_ptr<Hub> hub = std::make_shared<Hub>();
  net::io_context ioc;
  tcp::acceptor acceptor{ioc};
  std::unique_ptr<net::signal_set> signals;
  std::vector<std::thread> workers;
  std::thread sim;
  std::mutex state_mutex;
  std::condition_variable cv;
  bool stopping{false};
  bool started{false};
  std::uint16_t bound_port{0};

  void do_accept()
  {
    acceptor.async_accept(
      net::make_strand(ioc), [this](beast::error_code ec, tcp::socket socket) {
        if (ec) {
          return;  // acceptor closed
        }
        std::make_shared<HttpSession>(std::move(socket), hub)->start();
        do_accept();
      });
  }

  void publish_frame()
  {
    auto frame = std::make_shared<const std::string>(system->state_frame().dump());
    std::vector<std::shared_ptr<WsSession>> live;
    {
      std::lock_guard lock(hub->mutex);
      hub->snapshot = *frame;
      auto & s = hub->sessions;
      for (auto it = s.begin(); it != s.end(); ) {
        if (auto p = it->lock()) {
          live.push_back(std::move(p));
          ++it;
        } else {
          it = s.erase(it);
        }
      }
    }
    for (auto & session : live) {session->send(frame);}
  }

  void run_simulation()
  {
    const auto period = std::chrono::milliseconds(system->config().tick_period_ms);
    auto deadline = std::chrono::steady_clock::now() + period;
    std::unique_lock lock(state_mutex);
    while (!stopping) {
      if (cv.wait_until(lock, deadline, [this] {return stopping;})) {
        break;
      }
      lock.unlock();
      for (auto & cmd : hub->drain()) {
        try {
          submit(*system, cmd.command);
        } catch (const std::exception & e) {
          if (auto origin = cmd.origin.lock()) {
            origin->send(std::make_shared<const std::string>(error_frame("bad_command", e.what())));
          }
        }
      }
      system->advance();
      publish_frame();
      // Fixed-rate schedule; a late tick is not followed by a catch-up burst.
      deadline = std::max(deadline + period, std::chrono::steady_clock::now());
      lock.lock();
    }
  }

  void shutdown()
  {
    {
      std::lock_guard lock(state_mutex);
      if (stopping) {return;}
      stopping = true;
    }
    cv.notify_all();
    net::post(ioc, [this] {
        beast::error_code ignored;
        acceptor.close(ignored);
        if (signals) {signals->cancel();}
        ioc.stop();
      });
  }
};

Server::Server(std::unique_ptr<MascotSystem> system, ServerOptions options)
: impl_(std::make_unique<Impl>())
{
  impl_->system = std::move(system);
  impl_->options = options;
  impl_->hub->frame_buffer = options.frame_buffer;
}

Server::~Server()
{
  stop();
}

void Server::start()
{
  auto & s = *impl_;
  if (s.started) {return;}
  const tcp::endpoint endpoint(net::ip::make_address("0.0.0.0"), s.options.port);
  s.acceptor.open(endpoint.protocol());
  s.acceptor.set_option(net::socket_base::reuse_address(true));
  s.acceptor.bind(endpoint);
  s.acceptor.listen(net::socket_base::max_listen_connections);
  s.bound_port = s.acceptor.local_endpoint().port();
  s.hub->snapshot = s.system->state_frame().dump();

  if (s.options.handle_signals) {
    s.signals = std::make_unique<net::signal_set>(s.ioc, SIGINT, SIGTERM);
    s.signals->async_wait([this](beast::error_code ec, int) {
        if (!ec) {impl_->shutdown();}
      });
  }
  s.do_accept();
  s.started = true;
  s.workers.emplace_back([&s] {s.ioc.run();});
  s.workers.emplace_back([&s] {s.ioc.run();});
  s.sim = std::thread([&s] {s.run_simulation();});
}

void Server::wait()
{
  auto & s = *impl_;
  if (!s.started) {return;}
  {
    std::unique_lock lock(s.state_mutex);
    s.cv.wait(lock, [&s] {return s.stopping;});
  }
  if (s.sim.joinable()) {s.sim.join();}
  for (auto & w : s.workers) {
    if (w.joinable()) {w.join();}
  }
}

void Server::stop()
{
  auto & s = *impl_;
  if (!s.started) {return;}
  s.shutdown();
  wait();
}

std::uint16_t Server::port() const noexcept
{
  return impl_->bound_port;
}

}  // namespace mascot
