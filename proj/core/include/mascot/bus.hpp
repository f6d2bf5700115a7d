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

#ifndef MASCOT__BUS_HPP_
#define MASCOT__BUS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace mascot
{

enum class ComponentKind { robot, speech, recommender, gateway };

std::string_view to_string(ComponentKind kind);

struct ComponentId
{
  std::string name;
  ComponentKind kind{ComponentKind::robot};
};

/// Opaque registration handle. Default-constructed handles are invalid.
class ComponentHandle
{
public:
  ComponentHandle() = default;

  bool valid() const noexcept {return index_ != kInvalid;}
  std::size_t index() const noexcept {return index_;}

  friend bool operator==(const ComponentHandle &, const ComponentHandle &) = default;

private:
  friend class Bus;
  static constexpr std::size_t kInvalid = std::numeric_limits<std::size_t>::max();
  explicit ComponentHandle(std::size_t index) : index_(index) {}
  std::size_t index_{kInvalid};
};

struct Envelope
{
  std::uint64_t seq{0};
  std::string topic;
  std::string sender;
  std::uint64_t tick{0};
  std::string schema;
  nlohmann::json payload;
};

struct DeliveryRecord
{
  std::uint64_t tick;  // delivery tick
  std::string subscriber;
  std::string sender;
  std::uint64_t seq;
  std::string topic;

  friend bool operator==(const DeliveryRecord &, const DeliveryRecord &) = default;
};

/// '/'-separated segments; '*' matches exactly one segment.
bool topic_matches(std::string_view pattern, std::string_view topic);

class BusError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Tick-synchronous publish/subscribe bus.
///
/// Messages published during tick t are delivered by the step() that moves
/// the clock to t + 1. Within a step, messages are ordered by (sender
/// registration order, seq) and each one is fanned out to matching
/// subscribers in registration order. Handlers may publish; those messages
/// carry the new tick and go out on the following step.
///
/// Single-threaded: every call must come from the simulation thread.
class Bus
{
public:
  using Handler = std::function<void (const Envelope &)>;

  Bus() = default;
  Bus(const Bus &) = delete;
  Bus & operator=(const Bus &) = delete;

  /// Throws BusError on an empty or duplicate name.
  ComponentHandle register_component(ComponentId id, Handler handler = {});

  /// Adds a topic pattern for the component. A component receives each
  /// message at most once however many of its patterns match.
  void subscribe(ComponentHandle handle, std::string pattern);

  /// Enqueues at the current tick and returns the sender's seq (1-based).
  std::uint64_t publish(
    ComponentHandle handle, std::string topic, nlohmann::json payload,
    std::string schema = {});

  /// Advances the clock and delivers everything published on the previous
  /// tick. Returns the number of (subscriber, message) deliveries.
  std::size_t step();

  std::uint64_t tick() const noexcept {return tick_;}
  std::size_t pending() const noexcept {return pending_.size();}
  std::size_t component_count() const noexcept {return components_.size();}
  const ComponentId & component(ComponentHandle handle) const;
  std::vector<ComponentId> components() const;
  ComponentHandle find(std::string_view name) const;

  /// Deliveries made by the most recent step().
  const std::vector<DeliveryRecord> & last_deliveries() const noexcept {return last_;}

  /// When enabled, every delivery is appended to log().
  void set_logging(bool enabled) noexcept {logging_ = enabled;}
  const std::vector<DeliveryRecord> & log() const noexcept {return log_;}

private:
  struct Component
  {
    ComponentId id;
    Handler handler;
    std::vector<std::string> patterns;
    std::uint64_t next_seq{1};
  };

  Component & checked(ComponentHandle handle);
  const Component & checked(ComponentHandle handle) const;

  struct Pending
  {
    std::size_t sender_index;
    Envelope envelope;
  };

  std::vector<Component> components_;
  std::vector<Pending> pending_;
  std::vector<DeliveryRecord> last_;
  std::vector<DeliveryRecord> log_;
  std::uint64_t tick_{0};
  bool logging_{false};
};

}  // namespace mascot

#endif  // MASCOT__BUS_HPP_
