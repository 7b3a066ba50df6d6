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

#ifndef CLOUDFOG_POWER_HPP
#define CLOUDFOG_POWER_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "cloudfog/catalog.hpp"
#include "cloudfog/flows.hpp"
#include "cloudfog/topology.hpp"

namespace cloudfog {

/// Wattage per category. net_pc covers the transport network; pr_pc covers
/// processing plus the intra-site LANs, matching the model's objective split.
struct PowerBreakdown {
  // network
  double core_router_ports = 0.0;
  double core_transponders = 0.0;
  double core_edfas = 0.0;
  double core_optical_switches = 0.0;
  double core_regenerators = 0.0;
  double metro = 0.0;
  double access = 0.0;  // OLT + ONU
  double access_points = 0.0;
  double iot_transceivers = 0.0;
  // processing
  double proc_iot = 0.0;
  double proc_cpe = 0.0;
  double proc_access_fog = 0.0;
  double proc_metro_fog = 0.0;
  double proc_cloud_dc = 0.0;
  // intra-site LANs
  double lan_access_fog = 0.0;
  double lan_metro_fog = 0.0;
  double lan_cloud_dc = 0.0;

  double net_pc() const {
    return core_router_ports + core_transponders + core_edfas +
           core_optical_switches + core_regenerators + metro + access +
           access_points + iot_transceivers;
  }
  double pr_pc() const {
    return proc_iot + proc_cpe + proc_access_fog + proc_metro_fog +
           proc_cloud_dc + lan_access_fog + lan_metro_fog + lan_cloud_dc;
  }
  double total() const { return net_pc() + pr_pc(); }

  PowerBreakdown& operator+=(const PowerBreakdown& o) {
    core_router_ports += o.core_router_ports;
    core_transponders += o.core_transponders;
    core_edfas += o.core_edfas;
    core_optical_switches += o.core_optical_switches;
    core_regenerators += o.core_regenerators;
    metro += o.metro;
    access += o.access;
    access_points += o.access_points;
    iot_transceivers += o.iot_transceivers;
    proc_iot += o.proc_iot;
    proc_cpe += o.proc_cpe;
    proc_access_fog += o.proc_access_fog;
    proc_metro_fog += o.proc_metro_fog;
    proc_cloud_dc += o.proc_cloud_dc;
    lan_access_fog += o.lan_access_fog;
    lan_metro_fog += o.lan_metro_fog;
    lan_cloud_dc += o.lan_cloud_dc;
    return *this;
  }
};

inline nlohmann::json power_to_json(const PowerBreakdown& p) {
  return nlohmann::json{{"core_router_ports", p.core_router_ports},
                        {"core_transponders", p.core_transponders},
                        {"core_edfas", p.core_edfas},
                        {"core_optical_switches", p.core_optical_switches},
                        {"core_regenerators", p.core_regenerators},
                        {"metro", p.metro},
                        {"access", p.access},
                        {"access_points", p.access_points},
                        {"iot_transceivers", p.iot_transceivers},
                        {"proc_iot", p.proc_iot},
                        {"proc_cpe", p.proc_cpe},
                        {"proc_access_fog", p.proc_access_fog},
                        {"proc_metro_fog", p.proc_metro_fog},
                        {"proc_cloud_dc", p.proc_cloud_dc},
                        {"lan_access_fog", p.lan_access_fog},
                        {"lan_metro_fog", p.lan_metro_fog},
                        {"lan_cloud_dc", p.lan_cloud_dc},
                        {"net_pc", p.net_pc()},
                        {"pr_pc", p.pr_pc()},
                        {"total", p.total()}};
}

namespace detail {

inline double gbps(double mbps) { return mbps / 1000.0; }

}  // namespace detail

/// Transport-network power: core router ports, transponders, EDFAs, optical
/// switches and regenerators under the non-bypass approach, metro router and
/// switch, OLT and ONU, Wi-Fi APs, and IoT transceivers. Proportional terms
/// charge energy-per-bit times device load; idle terms are delta-scaled and
/// gated by activations (wavelength and fiber counts in the core).
inline PowerBreakdown network_power(const Topology& t, const FlowSet& flows,
                                    const ServerUsage& usage,
                                    const DeviceCatalog& cat) {
  using detail::gbps;
  PowerBreakdown p;
  const PueTable& pue = cat.pue;

  auto eps_of = [](const NetworkDeviceSpec& s) { return energy_per_bit(s.profile); };
  auto idle_of = [](const NetworkDeviceSpec& s) {
    return s.profile.idle_share_delta * s.profile.idle_power_w;
  };

  for (const Node& nd : t.nodes) {
    double load = flows.device_load_mbps[nd.id.value];
    bool active = flows.network_active[nd.id.value];
    if (load < 0.0) throw std::invalid_argument("network_power: negative traffic");
    switch (nd.kind) {
      case NodeKind::Iot:
        if (active) {
          p.iot_transceivers +=
              eps_of(cat.iot_radio) * gbps(load) + idle_of(cat.iot_radio);
        }
        break;
      case NodeKind::AccessPoint:
        if (active) {
          p.access_points +=
              eps_of(cat.access_point) * gbps(load) + idle_of(cat.access_point);
        }
        break;
      case NodeKind::Onu:
        if (active) {
          p.access += pue.access *
                      (eps_of(cat.onu) * gbps(load) + idle_of(cat.onu));
        }
        break;
      case NodeKind::Olt:
        if (active) {
          p.access += pue.access *
                      (eps_of(cat.olt) * gbps(load) + idle_of(cat.olt));
        }
        break;
      case NodeKind::MetroSwitch:
        if (active) {
          p.metro += pue.metro * (eps_of(cat.metro_switch) * gbps(load) +
                                  idle_of(cat.metro_switch));
        }
        break;
      case NodeKind::MetroRouter:
        if (active) {
          p.metro += pue.metro * cat.metro_router_port.redundancy *
                     (eps_of(cat.metro_router_port) * gbps(load) +
                      idle_of(cat.metro_router_port));
        }
        break;
      case NodeKind::CoreNode: {
        // Proportional terms on the node's forwarded core traffic; router
        // idle counts aggregation ports plus wavelength ports.
        p.core_router_ports += pue.core * eps_of(cat.core_router_port) * gbps(load);
        p.core_transponders += pue.core * eps_of(cat.transponder) * gbps(load);
        p.core_optical_switches +=
            pue.core * (eps_of(cat.optical_switch) * gbps(load) +
                        (active ? idle_of(cat.optical_switch) : 0.0));
        int agg = 0;
        if (auto it = usage.agg_ports.find(nd.id.value); it != usage.agg_ports.end()) {
          agg = it->second;
        }
        int wl_out = 0;
        for (size_t li = 0; li < t.links.size(); ++li) {
          const Link& l = t.links[li];
          if (!l.core) continue;
          int dir = -1;
          if (l.a == nd.id) dir = 0;
          if (l.b == nd.id) dir = 1;
          if (dir < 0) continue;
          if (auto it = usage.wavelengths.find(2 * static_cast<int>(li) + dir);
              it != usage.wavelengths.end()) {
            wl_out += it->second;
          }
        }
        p.core_router_ports +=
            pue.core * idle_of(cat.core_router_port) * (agg + wl_out);
        p.core_transponders += pue.core * idle_of(cat.transponder) * wl_out;
        break;
      }
      default:
        break;  // the DC's networking is its LAN, charged in lan_power
    }
  }

  // Per-core-link amplifier and regenerator terms.
  for (size_t li = 0; li < t.links.size(); ++li) {
    const Link& l = t.links[li];
    if (!l.core) continue;
    int amps = edfa_count(l.distance_km, cat.core.edfa_span_km);
    int regens = regenerator_count(l.distance_km, cat.core.regenerator_span_km);
    for (int dir = 0; dir < 2; ++dir) {
      double load = flows.link_load_mbps[2 * li + dir];
      int fibers = 0;
      int wl = 0;
      if (auto it = usage.fibers.find(2 * static_cast<int>(li) + dir);
          it != usage.fibers.end()) {
        fibers = it->second;
      }
      if (auto it = usage.wavelengths.find(2 * static_cast<int>(li) + dir);
          it != usage.wavelengths.end()) {
        wl = it->second;
      }
      p.core_edfas += pue.core * (eps_of(cat.edfa) * gbps(load) * amps * fibers +
                                  idle_of(cat.edfa) * amps * fibers);
      // Regenerator idle carries no delta in the model.
      p.core_regenerators +=
          pue.core * (eps_of(cat.regenerator) * gbps(load) * regens * wl +
                      cat.regenerator.profile.idle_power_w * regens * wl);
    }
  }
  return p;
}

/// Server power per layer: energy-per-MIPS times assigned load plus idle per
/// active server, PUE-scaled for access fog, metro fog and DC sites.
inline PowerBreakdown processing_power(const Topology& t,
                                       const ServerUsage& usage,
                                       const DeviceCatalog& cat) {
  PowerBreakdown p;
  for (const Node& nd : t.nodes) {
    double mips = usage.assigned_mips[nd.id.value];
    if (mips <= 0.0) continue;
    if (!nd.processing) {
      throw std::invalid_argument("processing_power: node " + nd.name +
                                  " has no processing");
    }
    int servers = usage.servers[nd.id.value];
    switch (nd.processing->layer) {
      case ProcessingLayer::Iot:
        p.proc_iot += cat.iot_server.energy_per_mips() * mips +
                      cat.iot_server.profile.idle_power_w * servers;
        break;
      case ProcessingLayer::Cpe:
        p.proc_cpe += cat.cpe_server.energy_per_mips() * mips +
                      cat.cpe_server.profile.idle_power_w * servers;
        break;
      case ProcessingLayer::AccessFog:
        p.proc_access_fog +=
            cat.pue.access * (cat.access_fog_server.energy_per_mips() * mips +
                              cat.access_fog_server.profile.idle_power_w * servers);
        break;
      case ProcessingLayer::MetroFog:
        p.proc_metro_fog +=
            cat.pue.metro * (cat.metro_fog_server.energy_per_mips() * mips +
                             cat.metro_fog_server.profile.idle_power_w * servers);
        break;
      case ProcessingLayer::CloudDc:
        p.proc_cloud_dc +=
            cat.pue.dc * (cat.dc_server.energy_per_mips() * mips +
                          cat.dc_server.profile.idle_power_w * servers);
        break;
    }
  }
  return p;
}

/// Intra-site LAN power at active fog and DC processing sites: router and
/// switch energy per bit on the traffic terminating for processing, plus
/// delta-scaled idles gated by the site activation.
inline PowerBreakdown lan_power(const Topology& t, const FlowSet& flows,
                                const DeviceCatalog& cat) {
  using detail::gbps;
  PowerBreakdown p;
  auto pair_term = [&](const NetworkDeviceSpec& router,
                       const NetworkDeviceSpec& sw, double theta_mbps) {
    double th = gbps(theta_mbps);
    return energy_per_bit(router.profile) * th +
           router.profile.idle_share_delta * router.profile.idle_power_w +
           energy_per_bit(sw.profile) * th +
           sw.profile.idle_share_delta * sw.profile.idle_power_w;
  };
  for (const Node& nd : t.nodes) {
    if (!nd.processing || !flows.processing_active[nd.id.value]) continue;
    double theta = flows.theta_mbps[nd.id.value];
    bool fog_site = nd.processing->layer == ProcessingLayer::AccessFog ||
                    nd.processing->layer == ProcessingLayer::MetroFog ||
                    nd.processing->layer == ProcessingLayer::CloudDc;
    if (fog_site && theta <= 0.0) {
      throw std::invalid_argument("lan_power: active processing site " +
                                  nd.name + " has no destined traffic");
    }
    switch (nd.processing->layer) {
      case ProcessingLayer::AccessFog:
        p.lan_access_fog += cat.pue.access *
                            pair_term(cat.access_fog_router,
                                      cat.access_fog_switch, theta);
        break;
      case ProcessingLayer::MetroFog:
        p.lan_metro_fog += cat.pue.metro *
                           pair_term(cat.metro_fog_router,
                                     cat.metro_fog_switch, theta);
        break;
      case ProcessingLayer::CloudDc:
        p.lan_cloud_dc += cat.pue.dc *
                          pair_term(cat.dc_lan_router, cat.dc_lan_switch, theta);
        break;
      default:
        break;  // IoT and CPE sites are single devices, no LAN
    }
  }
  return p;
}

inline PowerBreakdown total_power(const Topology& t, const FlowSet& flows,
                                  const ServerUsage& usage,
                                  const DeviceCatalog& cat) {
  PowerBreakdown p = network_power(t, flows, usage, cat);
  p += processing_power(t, usage, cat);
  p += lan_power(t, flows, cat);
  return p;
}

}  // namespace cloudfog

#endif  // CLOUDFOG_POWER_HPP
