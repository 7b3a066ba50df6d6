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

#ifndef CLOUDFOG_TOPOLOGY_HPP
#define CLOUDFOG_TOPOLOGY_HPP

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cloudfog/catalog.hpp"

namespace cloudfog {

enum class NodeKind {
  Iot,
  AccessPoint,
  Onu,
  Olt,
  MetroSwitch,
  MetroRouter,
  CoreNode,
  CloudDc,
};

inline const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Iot: return "iot";
    case NodeKind::AccessPoint: return "ap";
    case NodeKind::Onu: return "onu";
    case NodeKind::Olt: return "olt";
    case NodeKind::MetroSwitch: return "metro_switch";
    case NodeKind::MetroRouter: return "metro_router";
    case NodeKind::CoreNode: return "core";
    case NodeKind::CloudDc: return "dc";
  }
  return "?";
}

/// Processing tier attached to a node. Doubles as the allocation layer in
/// reports.
enum class ProcessingLayer { Iot, Cpe, AccessFog, MetroFog, CloudDc };

inline const char* to_string(ProcessingLayer l) {
  switch (l) {
    case ProcessingLayer::Iot: return "iot";
    case ProcessingLayer::Cpe: return "cpe";
    case ProcessingLayer::AccessFog: return "access_fog";
    case ProcessingLayer::MetroFog: return "metro_fog";
    case ProcessingLayer::CloudDc: return "cloud_dc";
  }
  return "?";
}

struct NodeId {
  int value = -1;
  friend bool operator==(NodeId a, NodeId b) { return a.value == b.value; }
  friend bool operator!=(NodeId a, NodeId b) { return a.value != b.value; }
  friend bool operator<(NodeId a, NodeId b) { return a.value < b.value; }
};

struct ProcessingSite {
  ProcessingLayer layer;
  int max_servers = 1;  // V_d
};

struct Node {
  NodeId id;
  NodeKind kind;
  std::optional<ProcessingSite> processing;
  int group = -1;  // IoT-group index for Iot/AccessPoint/Onu nodes
  std::string name;
};

enum class Medium { Wireless, Fibre };

struct Link {
  NodeId a;
  NodeId b;
  double capacity_mbps = 0.0;  // C_mn
  double distance_km = 0.0;    // D_mn
  Medium medium = Medium::Fibre;
  bool core = false;  // IP/WDM core hop (wavelength/fiber accounting applies)
};

/// One directed step of a route.
struct Hop {
  NodeId from;
  NodeId to;
  int link = -1;  // index into Topology::links
};

/// Number of EDFAs on a core fiber: floor(D/S_e - 1) + 2 (terminal
/// amplifiers included).
inline int edfa_count(double distance_km, double span_km) {
  if (distance_km < 0.0 || span_km <= 0.0) {
    throw std::invalid_argument("edfa_count: bad distance/span");
  }
  return static_cast<int>(std::floor(distance_km / span_km - 1.0)) + 2;
}

/// Number of regenerators on a core hop: floor(D/S_g - 1), floored at zero.
inline int regenerator_count(double distance_km, double span_km) {
  if (distance_km < 0.0 || span_km <= 0.0) {
    throw std::invalid_argument("regenerator_count: bad distance/span");
  }
  return std::max(0, static_cast<int>(std::floor(distance_km / span_km - 1.0)));
}

struct Topology {
  std::vector<Node> nodes;
  std::vector<Link> links;
  // adjacency[n] = list of (neighbor node index, link index)
  std::vector<std::vector<std::pair<int, int>>> adjacency;

  int groups = 0;
  int iot_per_group = 0;

  const Node& node(NodeId id) const { return nodes.at(id.value); }

  std::vector<NodeId> processing_nodes() const {
    std::vector<NodeId> out;
    for (const auto& n : nodes) {
      if (n.processing) out.push_back(n.id);
    }
    return out;
  }

  std::vector<NodeId> nodes_of_kind(NodeKind k) const {
    std::vector<NodeId> out;
    for (const auto& n : nodes) {
      if (n.kind == k) out.push_back(n.id);
    }
    return out;
  }

  /// Unique simple path between two nodes as directed hops. Empty for
  /// src == dst (self placement moves no traffic).
  std::vector<Hop> route(NodeId src, NodeId dst) const {
    if (src.value < 0 || src.value >= static_cast<int>(nodes.size()) ||
        dst.value < 0 || dst.value >= static_cast<int>(nodes.size())) {
      throw std::out_of_range("route: unknown node id");
    }
    if (src == dst) return {};
    // BFS; the reference build is a tree plus a single core chain, so the
    // shortest path is the unique simple path.
    std::vector<int> prev_node(nodes.size(), -1), prev_link(nodes.size(), -1);
    std::deque<int> queue{src.value};
    prev_node[src.value] = src.value;
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      if (cur == dst.value) break;
      for (auto [nb, li] : adjacency[cur]) {
        if (prev_node[nb] < 0) {
          prev_node[nb] = cur;
          prev_link[nb] = li;
          queue.push_back(nb);
        }
      }
    }
    if (prev_node[dst.value] < 0) {
      throw std::runtime_error("route: no path between " +
                               nodes[src.value].name + " and " +
                               nodes[dst.value].name);
    }
    std::vector<Hop> hops;
    for (int cur = dst.value; cur != src.value; cur = prev_node[cur]) {
      hops.push_back(Hop{NodeId{prev_node[cur]}, NodeId{cur}, prev_link[cur]});
    }
    std::reverse(hops.begin(), hops.end());
    return hops;
  }
};

/// Per-hop defaults of the reference build. Distances follow the paper's
/// assumptions: WLAN range 100 m, AP-ONU 100 m, PON reach 10 km, OLT-metro
/// 5 km, metro-core 300 km, core hop 2500 km; collocated devices sit at 0 km.
struct BuildOptions {
  int groups = 4;
  int iot_per_group = 5;

  double dist_iot_ap_km = 0.1;
  double dist_ap_onu_km = 0.1;
  double dist_onu_olt_km = 10.0;
  double dist_olt_metro_km = 5.0;
  double dist_metro_switch_router_km = 0.0;
  double dist_metro_core_km = 300.0;
  double dist_core_core_km = 2500.0;
  double dist_core_dc_km = 0.0;

  // Link capacities default to the adjacent device data rates of Table 1.
  double cap_iot_ap_mbps = 100.0;      // IoT Wi-Fi 0.1 Gb/s
  double cap_ap_onu_mbps = 300.0;      // ONU Wi-Fi 0.3 Gb/s
  double cap_onu_olt_mbps = 300.0;
  double cap_olt_metro_mbps = 600000.0;    // metro switch 600 Gb/s
  double cap_metro_internal_mbps = 40000.0;  // router port 40 Gb/s
  double cap_metro_core_mbps = 40000.0;
  double cap_core_core_mbps = 1280000.0;  // one fibre: B x W; fibres unbounded
  double cap_core_dc_mbps = 40000.0;

  // Servers per processing site (V_d). The cloud DC is uncapped.
  int servers_iot = 1;
  int servers_cpe = 1;
  int servers_access_fog = 2;
  int servers_metro_fog = 2;
  int servers_dc = kUnlimitedServers;
};

inline BuildOptions build_options_from_json(const nlohmann::json& j) {
  BuildOptions o;
  if (j.contains("groups")) o.groups = j.at("groups").get<int>();
  if (j.contains("iot_per_group")) o.iot_per_group = j.at("iot_per_group").get<int>();
  if (j.contains("distances_km")) {
    const auto& d = j.at("distances_km");
    auto get = [&](const char* k, double& out) {
      if (d.contains(k)) out = d.at(k).get<double>();
    };
    get("iot_ap", o.dist_iot_ap_km);
    get("ap_onu", o.dist_ap_onu_km);
    get("onu_olt", o.dist_onu_olt_km);
    get("olt_metro", o.dist_olt_metro_km);
    get("metro_switch_router", o.dist_metro_switch_router_km);
    get("metro_core", o.dist_metro_core_km);
    get("core_core", o.dist_core_core_km);
    get("core_dc", o.dist_core_dc_km);
  }
  if (j.contains("capacities_mbps")) {
    const auto& d = j.at("capacities_mbps");
    auto get = [&](const char* k, double& out) {
      if (d.contains(k)) out = d.at(k).get<double>();
    };
    get("iot_ap", o.cap_iot_ap_mbps);
    get("ap_onu", o.cap_ap_onu_mbps);
    get("onu_olt", o.cap_onu_olt_mbps);
    get("olt_metro", o.cap_olt_metro_mbps);
    get("metro_internal", o.cap_metro_internal_mbps);
    get("metro_core", o.cap_metro_core_mbps);
    get("core_core", o.cap_core_core_mbps);
    get("core_dc", o.cap_core_dc_mbps);
  }
  if (j.contains("servers")) {
    const auto& d = j.at("servers");
    auto get = [&](const char* k, int& out) {
      if (d.contains(k)) {
        int v = d.at(k).get<int>();
        out = v < 0 ? kUnlimitedServers : v;
      }
    };
    get("iot", o.servers_iot);
    get("cpe", o.servers_cpe);
    get("access_fog", o.servers_access_fog);
    get("metro_fog", o.servers_metro_fog);
    get("dc", o.servers_dc);
  }
  return o;
}

/// Builds the reference five-layer graph: per group, IoT nodes behind one AP
/// and one ONU; all ONUs on one OLT; OLT through metro switch and router to
/// core node 1; a single 2500 km core hop to core node 2 with the cloud DC
/// attached. Processing sits on IoT nodes (own CPU), ONUs (CPE server), the
/// OLT (access fog), the metro switch (metro fog) and the DC.
inline Topology build_reference(const BuildOptions& opt = {}) {
  if (opt.groups < 1 || opt.iot_per_group < 1) {
    throw std::invalid_argument("build_reference: groups and iot_per_group must be >= 1");
  }
  Topology t;
  t.groups = opt.groups;
  t.iot_per_group = opt.iot_per_group;

  auto add_node = [&](NodeKind kind, std::optional<ProcessingSite> proc,
                      int group, std::string name) {
    Node n;
    n.id = NodeId{static_cast<int>(t.nodes.size())};
    n.kind = kind;
    n.processing = proc;
    n.group = group;
    n.name = std::move(name);
    t.nodes.push_back(n);
    return n.id;
  };
  auto add_link = [&](NodeId a, NodeId b, double cap, double km, Medium m,
                      bool core) {
    t.links.push_back(Link{a, b, cap, km, m, core});
  };

  std::vector<NodeId> aps, onus;
  std::vector<std::vector<NodeId>> iots(opt.groups);
  for (int g = 0; g < opt.groups; ++g) {
    for (int i = 0; i < opt.iot_per_group; ++i) {
      iots[g].push_back(add_node(
          NodeKind::Iot, ProcessingSite{ProcessingLayer::Iot, opt.servers_iot},
          g, "iot" + std::to_string(g + 1) + "_" + std::to_string(i + 1)));
    }
    aps.push_back(add_node(NodeKind::AccessPoint, std::nullopt, g,
                           "ap" + std::to_string(g + 1)));
    onus.push_back(add_node(NodeKind::Onu,
                            ProcessingSite{ProcessingLayer::Cpe, opt.servers_cpe},
                            g, "onu" + std::to_string(g + 1)));
  }
  NodeId olt = add_node(NodeKind::Olt,
                        ProcessingSite{ProcessingLayer::AccessFog, opt.servers_access_fog},
                        -1, "olt");
  NodeId ms = add_node(NodeKind::MetroSwitch,
                       ProcessingSite{ProcessingLayer::MetroFog, opt.servers_metro_fog},
                       -1, "metro_switch");
  NodeId mr = add_node(NodeKind::MetroRouter, std::nullopt, -1, "metro_router");
  NodeId c1 = add_node(NodeKind::CoreNode, std::nullopt, -1, "core1");
  NodeId c2 = add_node(NodeKind::CoreNode, std::nullopt, -1, "core2");
  NodeId dc = add_node(NodeKind::CloudDc,
                       ProcessingSite{ProcessingLayer::CloudDc, opt.servers_dc},
                       -1, "dc");

  for (int g = 0; g < opt.groups; ++g) {
    for (NodeId iot : iots[g]) {
      add_link(iot, aps[g], opt.cap_iot_ap_mbps, opt.dist_iot_ap_km,
               Medium::Wireless, false);
    }
    add_link(aps[g], onus[g], opt.cap_ap_onu_mbps, opt.dist_ap_onu_km,
             Medium::Fibre, false);
    add_link(onus[g], olt, opt.cap_onu_olt_mbps, opt.dist_onu_olt_km,
             Medium::Fibre, false);
  }
  add_link(olt, ms, opt.cap_olt_metro_mbps, opt.dist_olt_metro_km,
           Medium::Fibre, false);
  add_link(ms, mr, opt.cap_metro_internal_mbps, opt.dist_metro_switch_router_km,
           Medium::Fibre, false);
  add_link(mr, c1, opt.cap_metro_core_mbps, opt.dist_metro_core_km,
           Medium::Fibre, false);
  add_link(c1, c2, opt.cap_core_core_mbps, opt.dist_core_core_km,
           Medium::Fibre, true);
  add_link(c2, dc, opt.cap_core_dc_mbps, opt.dist_core_dc_km, Medium::Fibre,
           false);

  t.adjacency.assign(t.nodes.size(), {});
  for (int li = 0; li < static_cast<int>(t.links.size()); ++li) {
    const Link& l = t.links[li];
    t.adjacency[l.a.value].push_back({l.b.value, li});
    t.adjacency[l.b.value].push_back({l.a.value, li});
  }
  return t;
}

/// Structural checks: connectivity, PON tree wiring, capacity positivity,
/// wireless only on IoT-AP hops, processing on the expected kinds. Returns
/// human-readable violations; empty means valid.
inline std::vector<std::string> validate(const Topology& t) {
  std::vector<std::string> out;
  if (t.nodes.empty()) {
    out.push_back("topology has no nodes");
    return out;
  }
  // connectivity
  std::vector<char> seen(t.nodes.size(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (auto [nb, li] : t.adjacency[cur]) {
      (void)li;
      if (!seen[nb]) {
        seen[nb] = 1;
        ++count;
        queue.push_back(nb);
      }
    }
  }
  if (count != static_cast<int>(t.nodes.size())) {
    out.push_back("graph is disconnected (" + std::to_string(count) + "/" +
                  std::to_string(t.nodes.size()) + " reachable)");
  }
  for (size_t li = 0; li < t.links.size(); ++li) {
    const Link& l = t.links[li];
    const Node& a = t.node(l.a);
    const Node& b = t.node(l.b);
    if (l.capacity_mbps <= 0.0) {
      out.push_back("link " + a.name + "-" + b.name + " has nonpositive capacity");
    }
    if (l.distance_km < 0.0) {
      out.push_back("link " + a.name + "-" + b.name + " has negative distance");
    }
    bool iot_ap = (a.kind == NodeKind::Iot && b.kind == NodeKind::AccessPoint) ||
                  (b.kind == NodeKind::Iot && a.kind == NodeKind::AccessPoint);
    if (l.medium == Medium::Wireless && !iot_ap) {
      out.push_back("link " + a.name + "-" + b.name +
                    " is wireless outside the IoT-AP layer");
    }
  }
  // PON tree: each ONU hangs off exactly one OLT, each AP off one ONU, each
  // IoT off one AP.
  auto parents_of_kind = [&](const Node& n, NodeKind parent) {
    int c = 0;
    for (auto [nb, li] : t.adjacency[n.id.value]) {
      (void)li;
      if (t.nodes[nb].kind == parent) ++c;
    }
    return c;
  };
  for (const Node& n : t.nodes) {
    switch (n.kind) {
      case NodeKind::Iot:
        if (parents_of_kind(n, NodeKind::AccessPoint) != 1) {
          out.push_back(n.name + ": IoT node must attach to exactly one AP");
        }
        if (!n.processing) out.push_back(n.name + ": IoT node lacks processing");
        break;
      case NodeKind::Onu:
        if (parents_of_kind(n, NodeKind::Olt) != 1) {
          out.push_back(n.name + ": PON tree breach (ONU must attach to exactly one OLT)");
        }
        break;
      case NodeKind::AccessPoint:
        if (parents_of_kind(n, NodeKind::Onu) != 1) {
          out.push_back(n.name + ": AP must attach to exactly one ONU");
        }
        if (n.processing) out.push_back(n.name + ": AP cannot host processing");
        break;
      case NodeKind::MetroRouter:
      case NodeKind::CoreNode:
        if (n.processing) {
          out.push_back(n.name + ": transit node cannot host processing");
        }
        break;
      default:
        break;
    }
    if (n.processing && n.processing->max_servers < 1) {
      out.push_back(n.name + ": max_servers must be >= 1");
    }
  }
  return out;
}

/// Deterministic adjacency dump (node list + link list) for debugging.
inline std::string dump(const Topology& t) {
  std::ostringstream os;
  os << "nodes " << t.nodes.size() << "\n";
  for (const Node& n : t.nodes) {
    os << "  " << n.id.value << " " << n.name << " kind=" << to_string(n.kind);
    if (n.group >= 0) os << " group=" << n.group + 1;
    if (n.processing) {
      os << " processing=" << to_string(n.processing->layer) << " servers=";
      if (n.processing->max_servers == kUnlimitedServers) {
        os << "unlimited";
      } else {
        os << n.processing->max_servers;
      }
    }
    os << "\n";
  }
  os << "links " << t.links.size() << "\n";
  for (const Link& l : t.links) {
    os << "  " << t.node(l.a).name << " -- " << t.node(l.b).name
       << " cap=" << l.capacity_mbps << "Mbps dist=" << l.distance_km << "km "
       << (l.medium == Medium::Wireless ? "wireless" : "fibre")
       << (l.core ? " core" : "") << "\n";
  }
  return os.str();
}

}  // namespace cloudfog

#endif  // CLOUDFOG_TOPOLOGY_HPP
