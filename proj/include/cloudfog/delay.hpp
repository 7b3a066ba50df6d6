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

#ifndef CLOUDFOG_DELAY_HPP
#define CLOUDFOG_DELAY_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "cloudfog/flows.hpp"
#include "cloudfog/topology.hpp"

namespace cloudfog {

/// Queuing service classes. The AP runs at its wireless interface rate, core
/// and DC nodes at the IP/WDM rate, everything else at the GPON rate. IoT
/// nodes do not queue.
struct DelayConstants {
  double speed_of_light_km_s = 299792.0;
  double fibre_ri_ratio = 2.0 / 3.0;  // speed in fibre / speed in free space
  double packet_bits = 1500.0 * 8.0;
  double ap_gbps = 1.0;
  double core_dc_gbps = 40.0;
  double default_gbps = 10.0;

  double service_rate_gbps(NodeKind kind) const {
    switch (kind) {
      case NodeKind::AccessPoint: return ap_gbps;
      case NodeKind::CoreNode:
      case NodeKind::CloudDc: return core_dc_gbps;
      default: return default_gbps;
    }
  }
  double service_rate_pkts(NodeKind kind) const {
    return service_rate_gbps(kind) * 1e9 / packet_bits;
  }
  double mbps_to_pkts(double mbps) const { return mbps * 1e6 / packet_bits; }
};

/// M/M/1 sojourn time 1/(mu - lambda), in seconds.
inline double mm1_delay(double arrival_pkts, double service_pkts) {
  if (arrival_pkts < 0.0) {
    throw std::invalid_argument("mm1_delay: negative arrival rate");
  }
  if (arrival_pkts >= service_pkts) {
    throw std::domain_error("mm1_delay: arrival rate " +
                            std::to_string(arrival_pkts) +
                            " saturates service rate " +
                            std::to_string(service_pkts));
  }
  return 1.0 / (service_pkts - arrival_pkts);
}

/// Propagation over a path: fibre hops at c * 2/3, wireless hops at c.
inline double propagation_delay(const Topology& t, const std::vector<Hop>& path,
                                const DelayConstants& k = {}) {
  double sec = 0.0;
  for (const Hop& h : path) {
    const Link& l = t.links[h.link];
    if (l.medium == Medium::Wireless) {
      sec += l.distance_km / k.speed_of_light_km_s;
    } else {
      sec += l.distance_km / (k.fibre_ri_ratio * k.speed_of_light_km_s);
    }
  }
  return sec;
}

/// Pre-computed queuing-delay table for one service-rate class. The arrival
/// grid holds every subset sum of the scenario's traffic demands, which makes
/// the linearization exact at all achievable aggregates.
struct QueueLookup {
  double service_pkts = 0.0;
  std::vector<std::pair<double, double>> entries;  // (arrival pkts/s, delay s)
  std::vector<double> infeasible;  // arrival rates at/above the service rate

  double delay_at(double arrival_pkts, double tol = 1e-6) const {
    for (const auto& [a, d] : entries) {
      if (std::abs(a - arrival_pkts) <= tol * std::max(1.0, std::abs(a))) {
        return d;
      }
    }
    throw std::domain_error("QueueLookup: arrival rate " +
                            std::to_string(arrival_pkts) +
                            " not on the grid");
  }
};

/// Builds the lookup for one service rate from the demand set (Mbps).
/// Entries at or above the service rate are excluded and reported as
/// infeasible aggregates.
inline QueueLookup build_lookup(const std::vector<double>& demands_mbps,
                                double service_gbps,
                                const DelayConstants& k = {}) {
  if (demands_mbps.empty()) {
    throw std::invalid_argument("build_lookup: empty demand set");
  }
  for (double d : demands_mbps) {
    if (d <= 0.0) throw std::invalid_argument("build_lookup: nonpositive demand");
  }
  QueueLookup lk;
  lk.service_pkts = service_gbps * 1e9 / k.packet_bits;
  std::set<double> sums{0.0};
  for (double d : demands_mbps) {
    std::set<double> next = sums;
    for (double s : sums) next.insert(s + d);
    sums.swap(next);
  }
  for (double mbps : sums) {
    double arrival = k.mbps_to_pkts(mbps);
    if (arrival >= lk.service_pkts) {
      lk.infeasible.push_back(arrival);
    } else {
      lk.entries.emplace_back(arrival, 1.0 / (lk.service_pkts - arrival));
    }
  }
  return lk;
}

/// Queuing delay along a path: sum over traversed nodes of the lookup value
/// at that node's aggregate arrival rate. The queue sits at the receiving end
/// of each hop; IoT nodes do not queue.
inline double path_queuing(const Topology& t, const std::vector<Hop>& path,
                           const std::vector<double>& arrivals_pkts,
                           const std::map<NodeKind, const QueueLookup*>& lookups) {
  double sec = 0.0;
  for (const Hop& h : path) {
    const Node& nd = t.node(h.to);
    if (nd.kind == NodeKind::Iot) continue;
    auto it = lookups.find(nd.kind);
    if (it == lookups.end() || it->second == nullptr) {
      throw std::invalid_argument("path_queuing: no lookup for node kind " +
                                  std::string(to_string(nd.kind)));
    }
    sec += it->second->delay_at(arrivals_pkts[nd.id.value]);
  }
  return sec;
}

/// Per-pair and total propagation/queuing delays of a placement.
struct DelayReport {
  std::vector<double> propagation_s;  // per task
  std::vector<double> queuing_s;      // per task
  double total_propagation_s = 0.0;
  double total_queuing_s = 0.0;

  double avg_propagation_s() const {
    return propagation_s.empty()
               ? 0.0
               : total_propagation_s / static_cast<double>(propagation_s.size());
  }
  double avg_queuing_s() const {
    return queuing_s.empty()
               ? 0.0
               : total_queuing_s / static_cast<double>(queuing_s.size());
  }
};

/// Evaluates both delay totals from routed flows, using the closed form at
/// each node's aggregate arrival (identical to the lookup values on the
/// subset-sum grid).
inline DelayReport compute_delays(const Topology& t, const FlowSet& flows,
                                  const DelayConstants& k = {}) {
  DelayReport r;
  for (const PairFlow& pf : flows.pairs) {
    double prop = propagation_delay(t, pf.path, k);
    double queue = 0.0;
    for (const Hop& h : pf.path) {
      const Node& nd = t.node(h.to);
      if (nd.kind == NodeKind::Iot) continue;
      queue += mm1_delay(k.mbps_to_pkts(flows.arrival_mbps[nd.id.value]),
                         k.service_rate_pkts(nd.kind));
    }
    r.propagation_s.push_back(prop);
    r.queuing_s.push_back(queue);
    r.total_propagation_s += prop;
    r.total_queuing_s += queue;
  }
  return r;
}

}  // namespace cloudfog

#endif  // CLOUDFOG_DELAY_HPP
