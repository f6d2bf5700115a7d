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

#ifndef MASCOT__SERVER_HPP_
#define MASCOT__SERVER_HPP_

#include <cstdint>
#include <memory>

#include "mascot/system.hpp"

namespace mascot
{

struct ServerOptions
{
  std::uint16_t port{8080};  // 0 picks an ephemeral port
  std::size_t frame_buffer{64};
  bool handle_signals{true};
};

/// HTTP GET /state plus a WebSocket /ws that streams one state frame per
/// tick and accepts operator commands.
///
/// The simulation runs on its own thread and is the only owner of the
/// system; network workers exchange queued commands and serialized frames
/// with it.
class Server
{
public:
  Server(std::unique_ptr<MascotSystem> system, ServerOptions options);
  ~Server();

  Server(const Server &) = delete;
  Server & operator=(const Server &) = delete;

  /// Binds and starts the simulation and network threads. Throws
  /// std::system_error on bind failure.
  void start();

  /// Blocks until stop() or a termination signal.
  void wait();

  void stop();

  std::uint16_t port() const noexcept;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mascot

#endif  // MASCOT__SERVER_HPP_
