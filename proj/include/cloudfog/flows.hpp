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

#ifndef CLOUDFOG_FLOWS_HPP
#define CLOUDFOG_FLOWS_HPP

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "cloudfog/catalog.hpp"
#include "cloudfog/topology.hpp"

namespace cloudfog {

/// One task request: CPU demand at an IoT source plus the traffic that must
/// reach wherever the task is processed.
struct TaskRequest {
  NodeId source;
  double cpu_mips = 0.0;
  double traffic_mbps = 0.0;
};

/// Routed traffic of one (source, destination) pair.
struct PairFlow {
  int task = -1;  // index into the demand list
  NodeId source;
  NodeId destination;
  double mbps = 0.0;
  std::vector<Hop> path;  // empty for self placement
};

/// Traffic aggregates of a placement, with the per-role semantics of the
/// traffic-aggregation constraints: IoT nodes count generated plus received
/// traffic, core nodes count traffic leaving on core links, every other node
/// counts incoming traffic once.
struct FlowSet {
  std::vector<PairFlow> pairs;
  std::vector<double> device_load_mbps;  // per node, the L_m / lambda_m feeding
                                         // the power equations
  std::vector<double> arrival_mbps;      // per node, incoming traffic (queuing)
  std::vector<double> theta_mbps;        // per node, traffic terminating for
                                         // processing
  std::vector<bool> network_active;      // B_m
  std::vector<bool> processing_active;   // Omega_d
  std::vector<double> link_load_mbps;    // per link per direction; index
                                         // 2*link + (a->b ? 0 : 1)

  double link_directed(int link, bool forward) const {
    return link_load_mbps[2 * link + (forward ? 0 : 1)];
  }
};

/// Server and core-equipment usage implied by a placement.
struct ServerUsage {
  std::vector<double> assigned_mips;  // per node
  std::vector<int> servers;           // N_d per node
  // Per directed core link (same indexing as FlowSet::link_load_mbps, core
  // links only): wavelengths and fibers.
  std::map<int, int> wavelengths;
  std::map<int, int> fibers;
  std::map<int, int> agg_ports;  // per core node
};

/// Destination choice per task. assignment[i] is where demands[i] runs.
using Assignment = std::vector<NodeId>;

namespace detail {

inline int layer_rank(ProcessingLayer l) {
  switch (l) {
    case ProcessingLayer::Iot: return 0;
    case ProcessingLayer::Cpe: return 1;
    case ProcessingLayer::AccessFog: return 2;
    case ProcessingLayer::MetroFog: return 3;
    case ProcessingLayer::CloudDc: return 4;
  }
  return 5;
}

inline const ProcessorSpec& processor_for(const DeviceCatalog& cat,
                                          ProcessingLayer layer) {
  switch (layer) {
    case ProcessingLayer::Iot: return cat.iot_server;
    case ProcessingLayer::Cpe: return cat.cpe_server;
    case ProcessingLayer::AccessFog: return cat.access_fog_server;
    case ProcessingLayer::MetroFog: return cat.metro_fog_server;
    case ProcessingLayer::CloudDc: return cat.dc_server;
  }
  throw std::logic_error("unknown layer");
}

}  // namespace detail

inline FlowSet derive_flows(const Topology& t,
                            const std::vector<TaskRequest>& demands,
                            const Assignment& assignment) {
  if (assignment.size() != demands.size()) {
    throw std::invalid_argument("derive_flows: assignment size mismatch");
  }
  FlowSet f;
  const size_t n = t.nodes.size();
  f.device_load_mbps.assign(n, 0.0);
  f.arrival_mbps.assign(n, 0.0);
  f.theta_mbps.assign(n, 0.0);
  f.network_active.assign(n, false);
  f.processing_active.assign(n, false);
  f.link_load_mbps.assign(2 * t.links.size(), 0.0);

  for (size_t i = 0; i < demands.size(); ++i) {
    const TaskRequest& task = demands[i];
    NodeId dst = assignment[i];
    if (task.traffic_mbps < 0.0) {
      throw std::invalid_argument("derive_flows: negative traffic");
    }
    const Node& dnode = t.node(dst);
    if (!dnode.processing) {
      throw std::invalid_argument("derive_flows: destination " + dnode.name +
                                  " has no processing");
    }
    f.processing_active[dst.value] = true;
    PairFlow pf;
    pf.task = static_cast<int>(i);
    pf.source = task.source;
    pf.destination = dst;
    pf.mbps = task.traffic_mbps;
    if (dst != task.source) {
      pf.path = t.route(task.source, dst);
      // source generates
      f.device_load_mbps[task.source.value] += task.traffic_mbps;
      for (const Hop& h : pf.path) {
        const Link& l = t.links[h.link];
        bool forward = (h.from == l.a);
        f.link_load_mbps[2 * h.link + (forward ? 0 : 1)] += task.traffic_mbps;
        f.arrival_mbps[h.to.value] += task.traffic_mbps;
        const Node& to = t.node(h.to);
        const Node& from = t.node(h.from);
        if (to.kind == NodeKind::CoreNode) {
          // core nodes are charged for traffic they forward on core links,
          // handled below via link loads
        }
        if (to.kind != NodeKind::CoreNode) {
          f.device_load_mbps[h.to.value] += task.traffic_mbps;
        }
        (void)from;
      }
    }
    f.pairs.push_back(std::move(pf));
  }
  // Core node loads: traffic leaving the node on core links.
  for (size_t li = 0; li < t.links.size(); ++li) {
    const Link& l = t.links[li];
    if (!l.core) continue;
    f.device_load_mbps[l.a.value] += f.link_load_mbps[2 * li + 0];
    f.device_load_mbps[l.b.value] += f.link_load_mbps[2 * li + 1];
  }
  for (size_t v = 0; v < n; ++v) {
    f.network_active[v] = f.device_load_mbps[v] > 0.0;
    // Traffic counted for processing linearizes to the full node aggregate at
    // active sites (theta_d = lambda_d * Omega_d).
    f.theta_mbps[v] = f.processing_active[v] ? f.device_load_mbps[v] : 0.0;
  }
  return f;
}

inline ServerUsage derive_usage(const Topology& t, const DeviceCatalog& cat,
                                const std::vector<TaskRequest>& demands,
                                const Assignment& assignment,
                                const FlowSet& flows) {
  ServerUsage u;
  u.assigned_mips.assign(t.nodes.size(), 0.0);
  u.servers.assign(t.nodes.size(), 0);
  for (size_t i = 0; i < demands.size(); ++i) {
    u.assigned_mips[assignment[i].value] += demands[i].cpu_mips;
  }
  for (const Node& nd : t.nodes) {
    double mips = u.assigned_mips[nd.id.value];
    if (mips <= 0.0) continue;
    if (!nd.processing) {
      throw std::invalid_argument("derive_usage: MIPS assigned to " + nd.name +
                                  " which has no processing");
    }
    const ProcessorSpec& spec = detail::processor_for(cat, nd.processing->layer);
    u.servers[nd.id.value] =
        static_cast<int>(std::ceil(mips / spec.capacity_mips() - 1e-9));
  }
  // Wavelengths, fibers, aggregation ports on core links (constraints 36-38
  // taken as equalities at the optimum).
  const double wavelength_mbps = cat.core.wavelength_gbps * 1000.0;
  for (size_t li = 0; li < t.links.size(); ++li) {
    if (!t.links[li].core) continue;
    for (int dir = 0; dir < 2; ++dir) {
      double load = flows.link_load_mbps[2 * li + dir];
      int w = load > 0.0
                  ? static_cast<int>(std::ceil(load / wavelength_mbps - 1e-9))
                  : 0;
      u.wavelengths[2 * static_cast<int>(li) + dir] = w;
      u.fibers[2 * static_cast<int>(li) + dir] =
          w > 0 ? static_cast<int>(std::ceil(
                      static_cast<double>(w) / cat.core.wavelengths_per_fiber -
                      1e-9))
                : 0;
    }
  }
  for (const Node& nd : t.nodes) {
    if (nd.kind != NodeKind::CoreNode) continue;
    double load = flows.device_load_mbps[nd.id.value];
    u.agg_ports[nd.id.value] =
        load > 0.0 ? static_cast<int>(std::ceil(load / wavelength_mbps - 1e-9))
                   : 0;
  }
  return u;
}

}  // namespace cloudfog

#endif  // CLOUDFOG_FLOWS_HPP
