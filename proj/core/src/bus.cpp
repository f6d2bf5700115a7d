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

#include "mascot/bus.hpp"

#include <algorithm>
#include <utility>

namespace mascot
{

std::string_view to_string(ComponentKind kind)
{
  switch (kind) {
    case ComponentKind::robot: return "robot";
    case ComponentKind::speech: return "speech";
    case ComponentKind::recommender: return "recommender";
    case ComponentKind::gateway: return "gateway";
  }
  return "?";
}

bool topic_matches(std::string_view pattern, std::string_view topic)
{
  while (true) {
    const auto pcut = pattern.find('/');
    const auto tcut = topic.find('/');
    const auto pseg = pattern.substr(0, pcut);
    const auto tseg = topic.substr(0, tcut);
    if (pseg != "*" && pseg != tseg) {
      return false;
    }
    if (pseg == "*" && tseg.empty()) {
      return false;
    }
    if (pcut == std::string_view::npos || tcut == std::string_view::npos) {
      return pcut == tcut;
    }
    pattern.remove_prefix(pcut + 1);
    topic.remove_prefix(tcut + 1);
  }
}

ComponentHandle Bus::register_component(ComponentId id, Handler handler)
{
  if (id.name.empty()) {
    throw BusError("component name must be non-empty");
  }
  if (find(id.name).valid()) {
    throw BusError("component '" + id.name + "' is already registered");
  }
  components_.push_back({std::move(id), std::move(handler), {}, 1});
  return ComponentHandle(components_.size() - 1);
}

Bus::Component & Bus::checked(ComponentHandle handle)
{
  if (!handle.valid() || handle.index() >= components_.size()) {
    throw BusError("unregistered component handle");
  }
  return components_[handle.index()];
}

const Bus::Component & Bus::checked(ComponentHandle handle) const
{
  if (!handle.valid() || handle.index() >= components_.size()) {
    throw BusError("unregistered component handle");
  }
  return components_[handle.index()];
}

void Bus::subscribe(ComponentHandle handle, std::string pattern)
{
  if (pattern.empty()) {
    throw BusError("subscription pattern must be non-empty");
  }
  checked(handle).patterns.push_back(std::move(pattern));
}

std::uint64_t Bus::publish(
  ComponentHandle handle, std::string topic, nlohmann::json payload, std::string schema)
{
  auto & sender = checked(handle);
  Envelope env;
  env.seq = sender.next_seq++;
  env.topic = std::move(topic);
  env.sender = sender.id.name;
  env.tick = tick_;
  env.schema = std::move(schema);
  env.payload = std::move(payload);
  pending_.push_back({handle.index(), std::move(env)});
  return pending_.back().envelope.seq;
}

std::size_t Bus::step()
{
  // Everything pending was published at the current tick; handlers that
  // publish during delivery write into a fresh queue stamped tick + 1.
  std::vector<Pending> batch;
  batch.swap(pending_);
  ++tick_;
  std::stable_sort(batch.begin(), batch.end(), [](const Pending & a, const Pending & b) {
      if (a.sender_index != b.sender_index) {return a.sender_index < b.sender_index;}
      return a.envelope.seq < b.envelope.seq;
    });

  last_.clear();
  for (const auto & msg : batch) {
    // Components registered by a handler during this step only see later messages.
    const std::size_t n = components_.size();
    for (std::size_t s = 0; s < n; ++s) {
      const auto & patterns = components_[s].patterns;
      const bool match = std::any_of(patterns.begin(), patterns.end(), [&](const std::string & p) {
            return topic_matches(p, msg.envelope.topic);
          });
      if (!match) {
        continue;
      }
      DeliveryRecord rec{tick_, components_[s].id.name, msg.envelope.sender, msg.envelope.seq,
        msg.envelope.topic};
      if (logging_) {
        log_.push_back(rec);
      }
      last_.push_back(std::move(rec));
      // Copy: the handler may register components and reallocate the table.
      const Handler handler = components_[s].handler;
      if (handler) {
        handler(msg.envelope);
      }
    }
  }
  return last_.size();
}

const ComponentId & Bus::component(ComponentHandle handle) const
{
  return checked(handle).id;
}

std::vector<ComponentId> Bus::components() const
{
  std::vector<ComponentId> out;
  out.reserve(components_.size());
  for (const auto & c : components_) {out.push_back(c.id);}
  return out;
}

ComponentHandle Bus::find(std::string_view name) const
{
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].id.name == name) {
      return ComponentHandle(i);
    }
  }
  return {};
}

}  // namespace mascot
