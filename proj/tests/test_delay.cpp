// Copyright 2026 The cloudfog Authors
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

#include <catch2/catch_amalgamated.hpp>

#include "cloudfog/delay.hpp"
#include "cloudfog/topology.hpp"

using namespace cloudfog;
using Catch::Approx;

TEST_CASE("mm1 closed form") {
  DelayConstants k;
  // 10 Gb/s with 1500 B packets: mu = 833333.3 pkt/s, idle sojourn 1.2 us
  double mu10 = k.service_rate_pkts(NodeKind::Onu);
  CHECK(mu10 == Approx(833333.3333).epsilon(1e-6));
  CHECK(mm1_delay(0.0, mu10) == Approx(1.2e-6));
  // 1 Gb/s at half load: 1/(mu/2) = 24 us
  double mu1 = k.service_rate_pkts(NodeKind::AccessPoint);
  CHECK(mm1_delay(mu1 / 2.0, mu1) == Approx(24e-6));
  // 40 Gb/s idle: 0.3 us
  CHECK(mm1_delay(0.0, k.service_rate_pkts(NodeKind::CoreNode)) == Approx(0.3e-6));
  CHECK_THROWS_AS(mm1_delay(mu1, mu1), std::domain_error);
  CHECK_THROWS_AS(mm1_delay(-1.0, mu1), std::invalid_argument);
}

TEST_CASE("propagation over fibre and wireless hops") {
  Topology t = build_reference();
  DelayConstants k;
  SECTION("empty path") {
    CHECK(propagation_delay(t, {}, k) == 0.0);
  }
  SECTION("300 km fibre hop is about 1.501 ms") {
    // metro_router -> core1 is the 300 km fibre hop
    NodeId mr, c1;
    for (const Node& n : t.nodes) {
      if (n.name == "metro_router") mr = n.id;
      if (n.name == "core1") c1 = n.id;
    }
    auto hops = t.route(mr, c1);
    REQUIRE(hops.size() == 1);
    CHECK(propagation_delay(t, hops, k) == Approx(1.50104e-3).epsilon(1e-4));
  }
  SECTION("0.1 km wireless hop is about 0.3336 us") {
    NodeId iot, ap;
    for (const Node& n : t.nodes) {
      if (n.name == "iot1_1") iot = n.id;
      if (n.name == "ap1") ap = n.id;
    }
    auto hops = t.route(iot, ap);
    REQUIRE(hops.size() == 1);
    CHECK(propagation_delay(t, hops, k) == Approx(0.33356e-6).epsilon(1e-4));
  }
  SECTION("additive and permutation invariant") {
    NodeId iot, dc;
    for (const Node& n : t.nodes) {
      if (n.name == "iot1_1") iot = n.id;
      if (n.name == "dc") dc = n.id;
    }
    auto hops = t.route(iot, dc);
    double whole = propagation_delay(t, hops, k);
    double parts = 0.0;
    for (const Hop& h : hops) parts += propagation_delay(t, {h}, k);
    CHECK(whole == Approx(parts));
    std::vector<Hop> shuffled(hops.rbegin(), hops.rend());
    CHECK(propagation_delay(t, shuffled, k) == Approx(whole));
  }
}

TEST_CASE("lookup grid holds the demand subset sums") {
  DelayConstants k;
  SECTION("two unit demands") {
    QueueLookup lk = build_lookup({1.0, 1.0}, 10.0, k);
    REQUIRE(lk.entries.size() == 3);  // {0, 1, 2} Mbps
    CHECK(lk.entries[0].first == Approx(0.0));
    CHECK(lk.entries[1].first == Approx(k.mbps_to_pkts(1.0)));
    CHECK(lk.entries[2].first == Approx(k.mbps_to_pkts(2.0)));
    CHECK(lk.entries[0].second == Approx(1.2000e-6).epsilon(1e-5));
    CHECK(lk.entries[1].second == Approx(1.20012e-6).epsilon(1e-5));
    CHECK(lk.entries[2].second == Approx(1.20024e-6).epsilon(1e-5));
  }
  SECTION("single demand gives two combinations") {
    QueueLookup lk = build_lookup({5.0}, 10.0, k);
    CHECK(lk.entries.size() == 2);
  }
  SECTION("a demand beyond the service rate is flagged infeasible") {
    QueueLookup lk = build_lookup({2000.0}, 1.0, k);  // 2 Gb/s into 1 Gb/s
    CHECK(lk.entries.size() == 1);                    // only the empty sum
    REQUIRE(lk.infeasible.size() == 1);
    CHECK(lk.infeasible[0] >= lk.service_pkts);
  }
  SECTION("empty demand set is rejected") {
    CHECK_THROWS_AS(build_lookup({}, 10.0, k), std::invalid_argument);
  }
  SECTION("lookup equals the closed form on every grid point") {
    QueueLookup lk = build_lookup({1.0, 3.0, 7.0}, 10.0, k);
    for (const auto& [a, d] : lk.entries) {
      CHECK(d == Approx(mm1_delay(a, lk.service_pkts)).epsilon(1e-15));
    }
  }
  SECTION("delays increase with the arrival rate") {
    QueueLookup lk = build_lookup({2.0, 4.0, 8.0}, 10.0, k);
    for (size_t i = 1; i < lk.entries.size(); ++i) {
      CHECK(lk.entries[i].second > lk.entries[i - 1].second);
    }
  }
}

TEST_CASE("path queuing sums the receiving-node queues") {
  Topology t = build_reference();
  DelayConstants k;
  NodeId iot, ms;
  for (const Node& n : t.nodes) {
    if (n.name == "iot1_1") iot = n.id;
    if (n.name == "metro_switch") ms = n.id;
  }
  QueueLookup lk10 = build_lookup({1.0}, 10.0, k);
  QueueLookup lk1 = build_lookup({1.0}, 1.0, k);
  QueueLookup lk40 = build_lookup({1.0}, 40.0, k);
  std::map<NodeKind, const QueueLookup*> lookups{
      {NodeKind::AccessPoint, &lk1},  {NodeKind::Onu, &lk10},
      {NodeKind::Olt, &lk10},         {NodeKind::MetroSwitch, &lk10},
      {NodeKind::MetroRouter, &lk10}, {NodeKind::CoreNode, &lk40},
      {NodeKind::CloudDc, &lk40}};
  std::vector<double> arrivals(t.nodes.size(), 0.0);
  SECTION("empty path") {
    CHECK(path_queuing(t, {}, arrivals, lookups) == 0.0);
  }
  SECTION("three idle 10G nodes contribute 1.2 us each") {
    // onu1 -> olt -> metro_switch -> metro_router: three 10G queues
    NodeId onu, mr;
    for (const Node& n : t.nodes) {
      if (n.name == "onu1") onu = n.id;
      if (n.name == "metro_router") mr = n.id;
    }
    auto hops = t.route(onu, mr);
    REQUIRE(hops.size() == 3);
    CHECK(path_queuing(t, hops, arrivals, lookups) == Approx(3 * 1.2e-6));
  }
  SECTION("an AP carrying 100 Mbps adds about 13.33 us") {
    QueueLookup ap_lk = build_lookup({100.0}, 1.0, k);
    std::map<NodeKind, const QueueLookup*> lk2 = lookups;
    lk2[NodeKind::AccessPoint] = &ap_lk;
    NodeId ap;
    for (const Node& n : t.nodes) {
      if (n.name == "ap1") ap = n.id;
    }
    arrivals[ap.value] = k.mbps_to_pkts(100.0);
    auto hops = t.route(iot, ap);
    CHECK(path_queuing(t, hops, arrivals, lk2) ==
          Approx(1.0 / 75000.0).epsilon(1e-6));
  }
  SECTION("off-grid arrivals are an error, not an interpolation") {
    auto hops = t.route(iot, ms);
    arrivals[ms.value] = k.mbps_to_pkts(0.37);
    CHECK_THROWS_AS(path_queuing(t, hops, arrivals, lookups), std::domain_error);
  }
}
