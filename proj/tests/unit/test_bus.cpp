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

#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <gtest/gtest.h>

#include "mascot/bus.hpp"

namespace mascot
{
namespace
{

using nlohmann::json;

TEST(Bus, RegistersDefaultComposition)
{
  Bus bus;
  for (const char * name : {"R1", "R2", "R3", "R4", "R5"}) {
    bus.register_component({name, ComponentKind::robot});
  }
  bus.register_component({"speech", ComponentKind::speech});
  bus.register_component({"recommender", ComponentKind::recommender});
  EXPECT_EQ(bus.component_count(), 7u);
  EXPECT_EQ(bus.components()[5].name, "speech");
  EXPECT_TRUE(bus.find("R3").valid());
  EXPECT_FALSE(bus.find("R9").valid());
}

TEST(Bus, RejectsDuplicateAndEmptyNames)
{
  Bus bus;
  bus.register_component({"R1", ComponentKind::robot});
  EXPECT_THROW(bus.register_component({"R1", ComponentKind::speech}), BusError);
  EXPECT_THROW(bus.register_component({"", ComponentKind::robot}), BusError);
}

TEST(Bus, RejectsUnregisteredHandle)
{
  Bus bus;
  EXPECT_THROW(bus.publish(ComponentHandle{}, "t", json::object()), BusError);
  EXPECT_THROW(bus.subscribe(ComponentHandle{}, "t"), BusError);
  Bus other;
  other.register_component({"a", ComponentKind::robot});
  const auto foreign = other.register_component({"b", ComponentKind::robot});
  bus.register_component({"a", ComponentKind::robot});
  EXPECT_THROW(bus.publish(foreign, "t", json::object()), BusError);
}

TEST(Bus, SeqStartsAtOneAndDeliversInOrder)
{
  Bus bus;
  const auto r1 = bus.register_component({"R1", ComponentKind::robot});
  std::vector<std::uint64_t> seen;
  const auto sub = bus.register_component(
    {"gw", ComponentKind::gateway}, [&](const Envelope & e) {seen.push_back(e.seq);});
  bus.subscribe(sub, "robot/R1/pose");
  EXPECT_EQ(bus.publish(r1, "robot/R1/pose", json::object()), 1u);
  EXPECT_EQ(bus.publish(r1, "robot/R1/pose", json::object()), 2u);
  EXPECT_TRUE(seen.empty());
  EXPECT_EQ(bus.step(), 2u);
  EXPECT_EQ(bus.tick(), 1u);
  EXPECT_EQ(seen, (std::vector<std::uint64_t>{1, 2}));
}

TEST(Bus, EmptyStepAndUnsubscribedTopic)
{
  Bus bus;
  const auto a = bus.register_component({"a", ComponentKind::robot});
  EXPECT_EQ(bus.step(), 0u);
  bus.publish(a, "nobody/listens", json::object());
  EXPECT_EQ(bus.pending(), 1u);
  EXPECT_EQ(bus.step(), 0u);
  EXPECT_EQ(bus.pending(), 0u);
}

TEST(Bus, FansOutToEverySubscriber)
{
  Bus bus;
  const auto pub = bus.register_component({"speech", ComponentKind::speech});
  int hits = 0;
  for (const char * n : {"s1", "s2", "s3"}) {
    const auto h = bus.register_component({n, ComponentKind::robot}, [&](const Envelope &) {++hits;});
    bus.subscribe(h, "speech/hypothesis");
  }
  bus.publish(pub, "speech/hypothesis", json::object());
  EXPECT_EQ(bus.step(), 3u);
  EXPECT_EQ(hits, 3);
}

TEST(Bus, InterleavedSendersFollowTotalOrder)
{
  Bus bus;
  const auto a = bus.register_component({"A", ComponentKind::robot});
  const auto b = bus.register_component({"B", ComponentKind::robot});
  const auto s1 = bus.register_component({"S1", ComponentKind::gateway});
  const auto s2 = bus.register_component({"S2", ComponentKind::gateway});
  bus.subscribe(s1, "x");
  bus.subscribe(s2, "x");
  bus.publish(b, "x", json::object());
  bus.publish(a, "x", json::object());
  bus.publish(b, "x", json::object());
  bus.publish(a, "x", json::object());
  bus.step();
  // A registered before B, so A's pair goes first. Each message reaches S1
  // then S2.
  const std::vector<DeliveryRecord> expected{
    {1, "S1", "A", 1, "x"}, {1, "S2", "A", 1, "x"},
    {1, "S1", "A", 2, "x"}, {1, "S2", "A", 2, "x"},
    {1, "S1", "B", 1, "x"}, {1, "S2", "B", 1, "x"},
    {1, "S1", "B", 2, "x"}, {1, "S2", "B", 2, "x"}};
  EXPECT_EQ(bus.last_deliveries(), expected);
}

TEST(Bus, WildcardMatchesOneSegment)
{
  EXPECT_TRUE(topic_matches("robot/*/pose", "robot/R3/pose"));
  EXPECT_FALSE(topic_matches("robot/*/pose", "robot/R3/x/pose"));
  EXPECT_FALSE(topic_matches("robot/*/pose", "robot/pose"));
  EXPECT_TRUE(topic_matches("intent/delta", "intent/delta"));
  EXPECT_FALSE(topic_matches("intent/delta", "intent/deltas"));
  EXPECT_TRUE(topic_matches("robot/*", "robot/R1"));
}

TEST(Bus, OverlappingPatternsDeliverOnce)
{
  Bus bus;
  const auto r = bus.register_component({"R1", ComponentKind::robot});
  const auto g = bus.register_component({"gw", ComponentKind::gateway});
  bus.subscribe(g, "robot/*/pose");
  bus.subscribe(g, "robot/R1/pose");
  bus.publish(r, "robot/R1/pose", json::object());
  EXPECT_EQ(bus.step(), 1u);
}

TEST(Bus, HandlerPublishesGoOutNextTick)
{
  Bus bus;
  const auto src = bus.register_component({"src", ComponentKind::speech});
  ComponentHandle relay;
  relay = bus.register_component({"relay", ComponentKind::recommender}, [&](const Envelope & e) {
      EXPECT_EQ(e.tick, 0u);
      bus.publish(relay, "out", e.payload);
    });
  std::vector<std::uint64_t> got;
  const auto sink = bus.register_component({"sink", ComponentKind::gateway}, [&](const Envelope & e) {
      got.push_back(e.tick);
    });
  bus.subscribe(relay, "in");
  bus.subscribe(sink, "out");
  bus.publish(src, "in", json{{"v", 1}});
  EXPECT_EQ(bus.step(), 1u);
  EXPECT_TRUE(got.empty());
  EXPECT_EQ(bus.pending(), 1u);
  EXPECT_EQ(bus.step(), 1u);
  EXPECT_EQ(got, (std::vector<std::uint64_t>{1}));
}

std::vector<DeliveryRecord> random_run(std::uint64_t seed)
{
  Bus bus;
  bus.set_logging(true);
  std::vector<ComponentHandle> h;
  for (int i = 0; i < 6; ++i) {
    h.push_back(bus.register_component({"c" + std::to_string(i), ComponentKind::robot}));
  }
  const char * topics[] = {"a/x", "a/y", "b/x"};
  bus.subscribe(h[0], "a/*");
  bus.subscribe(h[1], "b/x");
  bus.subscribe(h[2], "a/x");
  bus.subscribe(h[3], "*/x");
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(rng() % 5);
    for (int k = 0; k < n; ++k) {
      bus.publish(h[rng() % h.size()], topics[rng() % 3], json::object());
    }
    bus.step();
  }
  return bus.log();
}

TEST(BusProperty, ExactlyOnceFifoDeterministic)
{
  const auto log = random_run(11);
  EXPECT_EQ(log, random_run(11));
  std::set<std::tuple<std::string, std::string, std::uint64_t>> triples;
  std::map<std::pair<std::string, std::string>, std::uint64_t> last_seq;
  for (const auto & d : log) {
    ASSERT_TRUE(triples.emplace(d.subscriber, d.sender, d.seq).second);
    auto & prev = last_seq[{d.subscriber, d.sender}];
    ASSERT_GT(d.seq, prev);
    prev = d.seq;
  }
  EXPECT_FALSE(log.empty());
}

TEST(BusProperty, EveryMatchingSubscriberGetsEveryMessage)
{
  Bus bus;
  bus.set_logging(true);
  const auto p = bus.register_component({"p", ComponentKind::robot});
  const auto s = bus.register_component({"s", ComponentKind::gateway});
  bus.subscribe(s, "a/*");
  std::mt19937_64 rng(4);
  std::uint64_t matching = 0;
  for (int t = 0; t < 100; ++t) {
    if (rng() % 2) {
      bus.publish(p, "a/b", json::object());
      ++matching;
    } else {
      bus.publish(p, "c/b", json::object());
    }
    bus.step();
  }
  EXPECT_EQ(bus.log().size(), matching);
}

}  // namespace
}  // namespace mascot
