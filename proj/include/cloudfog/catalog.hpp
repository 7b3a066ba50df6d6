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

#ifndef CLOUDFOG_CATALOG_HPP
#define CLOUDFOG_CATALOG_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace cloudfog {

/// Linear power profile: an idle floor plus a load-proportional section.
/// Capacity units depend on the device class: Gb/s for network devices,
/// kMIPS for processors.
struct PowerProfile {
  double max_power_w = 0.0;
  double idle_power_w = 0.0;
  double capacity = 0.0;
  /// Share of the idle power attributed to this use case. Shared equipment
  /// (OLT, metro, core, fog/DC LAN) defaults to 0.03; dedicated equipment
  /// carries its full idle power.
  double idle_share_delta = 1.0;
};

/// Power drawn at the given load. The idle share delta is NOT applied here;
/// the power equations apply it to the idle term where appropriate.
inline double linear_power(const PowerProfile& p, double load) {
  if (load < 0.0 || load > p.capacity + 1e-9) {
    throw std::domain_error("linear_power: load " + std::to_string(load) +
                            " outside [0, " + std::to_string(p.capacity) + "]");
  }
  return (p.max_power_w - p.idle_power_w) / p.capacity * load + p.idle_power_w;
}

/// Proportional slope of the profile, in W per capacity unit
/// (W/Gb/s for network devices).
inline double energy_per_bit(const PowerProfile& p) {
  if (p.capacity <= 0.0) {
    throw std::invalid_argument("energy_per_bit: nonpositive capacity");
  }
  return (p.max_power_w - p.idle_power_w) / p.capacity;
}

struct NetworkDeviceSpec {
  PowerProfile profile;  // capacity in Gb/s
  double redundancy = 1.0;  // metro router only

  double energy_per_gbps() const { return energy_per_bit(profile); }
};

/// Sentinel for processing sites without a server-count cap (the cloud DC).
inline constexpr int kUnlimitedServers = std::numeric_limits<int>::max();

struct ProcessorSpec {
  PowerProfile profile;  // capacity in kMIPS
  double clock_ghz = 0.0;
  double effective_ipc = 0.0;
  int cores = 1;
  int max_servers = 1;

  double capacity_mips() const { return profile.capacity * 1000.0; }
  /// W per MIPS; the tables publish this column in microwatts.
  double energy_per_mips() const {
    if (profile.capacity <= 0.0) {
      throw std::invalid_argument("energy_per_mips: nonpositive capacity");
    }
    return (p_max() - p_idle()) / capacity_mips();
  }

 private:
  double p_max() const { return profile.max_power_w; }
  double p_idle() const { return profile.idle_power_w; }
};

/// kMIPS capacity of a processor: clock (GHz) x instructions-per-cycle,
/// scaled by the core count. The published kMIPS columns equal this product;
/// the stored table values remain the ground truth.
inline double mips_capacity_kmips(double clock_ghz, double effective_ipc,
                                  int cores) {
  if (clock_ghz <= 0.0 || effective_ipc <= 0.0 || cores <= 0) {
    throw std::invalid_argument("mips_capacity_kmips: nonpositive input");
  }
  return clock_ghz * effective_ipc * static_cast<double>(cores);
}

/// MIPS needed per Mb of traffic, derived from the visual-processing
/// benchmark (69.23 MIPS per 10 kB file): 69.23 / 0.08 = 865.375.
/// The catalog default rounds this up to 1000.
inline double mips_per_mbps_derivation() { return 69.23 / 0.08; }

struct PueTable {
  double iot = 1.0;
  double cpe = 1.0;
  double access = 1.5;
  double metro = 1.4;
  double dc = 1.12;
  double core = 1.5;
};

struct CoreConstants {
  double wavelength_gbps = 40.0;       // B
  int wavelengths_per_fiber = 32;      // W
  double edfa_span_km = 80.0;          // S_e
  double regenerator_span_km = 2500.0; // S_g
};

/// Every device parameter the model consumes, keyed by role. Immutable after
/// load; safe for concurrent reads.
struct DeviceCatalog {
  // Network devices (Table 1 plus the core rows of Table 4 and the
  // intra-fog/DC LAN rows of Table 3).
  NetworkDeviceSpec iot_radio;
  NetworkDeviceSpec access_point;
  NetworkDeviceSpec onu;
  NetworkDeviceSpec olt;
  NetworkDeviceSpec metro_switch;
  NetworkDeviceSpec metro_router_port;
  NetworkDeviceSpec core_router_port;
  NetworkDeviceSpec transponder;
  NetworkDeviceSpec edfa;
  NetworkDeviceSpec optical_switch;
  NetworkDeviceSpec regenerator;
  NetworkDeviceSpec access_fog_router;
  NetworkDeviceSpec access_fog_switch;
  NetworkDeviceSpec metro_fog_router;
  NetworkDeviceSpec metro_fog_switch;
  NetworkDeviceSpec dc_lan_router;
  NetworkDeviceSpec dc_lan_switch;

  // Processing devices (Table 2).
  ProcessorSpec iot_server;
  ProcessorSpec cpe_server;
  ProcessorSpec access_fog_server;
  ProcessorSpec metro_fog_server;
  ProcessorSpec dc_server;

  PueTable pue;
  CoreConstants core;

  /// MIPS of processing demanded per Mbps of task traffic.
  double delta_mips_per_mbps = 1000.0;
};

namespace detail {

inline NetworkDeviceSpec net_spec(double max_w, double idle_w, double gbps,
                                  double delta, double redundancy = 1.0) {
  NetworkDeviceSpec s;
  s.profile = PowerProfile{max_w, idle_w, gbps, delta};
  s.redundancy = redundancy;
  return s;
}

inline ProcessorSpec proc_spec(double max_w, double idle_w, double kmips,
                               double clock_ghz, double ipc, int cores,
                               int max_servers) {
  ProcessorSpec s;
  s.profile = PowerProfile{max_w, idle_w, kmips, 1.0};
  s.clock_ghz = clock_ghz;
  s.effective_ipc = ipc;
  s.cores = cores;
  s.max_servers = max_servers;
  return s;
}

}  // namespace detail

/// Built-in defaults reproducing Tables 1-5.
///
/// Idle-share deltas: 3% on shared equipment (OLT, metro, core, LAN) and on
/// the IoT transceiver and ONU, whose idle power is likewise shared across a
/// premises' applications; the Wi-Fi AP serves the IoT group alone and
/// carries its full idle power. The tables list no AP row; the AP defaults to
/// the ONU Wi-Fi values. EDFA power is not tabulated either; 8 W max with a
/// 90% idle floor is the figure used by the core-network model the tables
/// cite.
inline DeviceCatalog default_catalog() {
  using detail::net_spec;
  using detail::proc_spec;
  DeviceCatalog c;
  c.iot_radio = net_spec(0.56, 0.34, 0.1, 0.03);
  c.access_point = net_spec(15.0, 9.0, 0.3, 1.0);
  c.onu = net_spec(15.0, 9.0, 0.3, 0.03);
  c.olt = net_spec(1940.0, 60.0, 8600.0, 0.03);
  c.metro_switch = net_spec(470.0, 423.0, 600.0, 0.03);
  c.metro_router_port = net_spec(30.0, 27.0, 40.0, 0.03, /*redundancy=*/2.0);
  c.core_router_port = net_spec(638.0, 574.2, 40.0, 0.03);
  c.transponder = net_spec(129.0, 116.0, 40.0, 0.03);
  c.edfa = net_spec(8.0, 7.2, 40.0, 0.03);
  c.optical_switch = net_spec(85.0, 76.5, 40.0, 0.03);
  c.regenerator = net_spec(71.4, 64.0, 40.0, 0.03);
  c.access_fog_router = net_spec(13.0, 11.7, 40.0, 0.03);
  c.access_fog_switch = net_spec(210.0, 189.0, 240.0, 0.03);
  c.metro_fog_router = net_spec(13.0, 11.7, 40.0, 0.03);
  c.metro_fog_switch = net_spec(210.0, 189.0, 600.0, 0.03);
  c.dc_lan_router = net_spec(30.0, 27.0, 40.0, 0.03);
  c.dc_lan_switch = net_spec(470.0, 423.0, 600.0, 0.03);

  c.iot_server = proc_spec(3.96, 0.5, 1.0, 1.0, 1.0, 1, 1);
  c.cpe_server = proc_spec(12.5, 2.0, 2.4, 1.2, 2.0, 1, 1);
  c.access_fog_server = proc_spec(95.0, 57.0, 34.2, 1.9, 3.0, 6, 2);
  c.metro_fog_server = proc_spec(95.0, 57.0, 73.44, 3.06, 4.0, 6, 2);
  c.dc_server = proc_spec(130.0, 78.0, 108.0, 2.7, 5.0, 8, kUnlimitedServers);

  c.pue = PueTable{};
  c.core = CoreConstants{};
  c.delta_mips_per_mbps = 1000.0;
  return c;
}

// ---------------------------------------------------------------------------
// Serialization. Flat JSON document; missing fields fall back to defaults.
// Schema documented in docs/catalog_schema.md.
// ---------------------------------------------------------------------------

namespace detail {

inline void profile_to_json(nlohmann::json& j, const PowerProfile& p) {
  j["max_power_w"] = p.max_power_w;
  j["idle_power_w"] = p.idle_power_w;
  j["capacity"] = p.capacity;
  j["idle_share_delta"] = p.idle_share_delta;
}

inline void profile_from_json(const nlohmann::json& j, PowerProfile& p,
                              const std::string& path) {
  if (j.contains("max_power_w")) p.max_power_w = j.at("max_power_w").get<double>();
  if (j.contains("idle_power_w")) p.idle_power_w = j.at("idle_power_w").get<double>();
  if (j.contains("capacity")) p.capacity = j.at("capacity").get<double>();
  if (j.contains("idle_share_delta"))
    p.idle_share_delta = j.at("idle_share_delta").get<double>();
  if (p.idle_power_w < 0.0 || p.idle_power_w > p.max_power_w) {
    throw std::runtime_error(path + ": idle_power_w " +
                             std::to_string(p.idle_power_w) +
                             " outside [0, max_power_w]");
  }
  if (p.capacity <= 0.0) {
    throw std::runtime_error(path + ": capacity must be positive");
  }
  if (p.idle_share_delta < 0.0 || p.idle_share_delta > 1.0) {
    throw std::runtime_error(path + ": idle_share_delta outside [0, 1]");
  }
}

inline void net_to_json(nlohmann::json& j, const NetworkDeviceSpec& s) {
  profile_to_json(j, s.profile);
  j["redundancy"] = s.redundancy;
}

inline void net_from_json(const nlohmann::json& j, NetworkDeviceSpec& s,
                          const std::string& path) {
  profile_from_json(j, s.profile, path);
  if (j.contains("redundancy")) s.redundancy = j.at("redundancy").get<double>();
  if (s.redundancy < 1.0) {
    throw std::runtime_error(path + ": redundancy must be >= 1");
  }
}

inline void proc_to_json(nlohmann::json& j, const ProcessorSpec& s) {
  j["max_power_w"] = s.profile.max_power_w;
  j["idle_power_w"] = s.profile.idle_power_w;
  j["capacity_kmips"] = s.profile.capacity;
  j["clock_ghz"] = s.clock_ghz;
  j["instructions_per_cycle"] = s.effective_ipc;
  j["cores"] = s.cores;
  j["max_servers"] = s.max_servers == kUnlimitedServers ? -1 : s.max_servers;
}

inline void proc_from_json(const nlohmann::json& j, ProcessorSpec& s,
                           const std::string& path) {
  if (j.contains("max_power_w")) s.profile.max_power_w = j.at("max_power_w").get<double>();
  if (j.contains("idle_power_w")) s.profile.idle_power_w = j.at("idle_power_w").get<double>();
  if (j.contains("capacity_kmips")) s.profile.capacity = j.at("capacity_kmips").get<double>();
  if (j.contains("clock_ghz")) s.clock_ghz = j.at("clock_ghz").get<double>();
  if (j.contains("instructions_per_cycle"))
    s.effective_ipc = j.at("instructions_per_cycle").get<double>();
  if (j.contains("cores")) s.cores = j.at("cores").get<int>();
  if (j.contains("max_servers")) {
    int v = j.at("max_servers").get<int>();
    s.max_servers = v < 0 ? kUnlimitedServers : v;
  }
  if (s.profile.idle_power_w < 0.0 ||
      s.profile.idle_power_w > s.profile.max_power_w) {
    throw std::runtime_error(path + ": idle_power_w outside [0, max_power_w]");
  }
  if (s.profile.capacity <= 0.0) {
    throw std::runtime_error(path + ": capacity_kmips must be positive");
  }
  if (s.max_servers != kUnlimitedServers && s.max_servers < 1) {
    throw std::runtime_error(path + ": max_servers must be >= 1 (or -1)");
  }
}

template <typename Catalog, typename Fn>
void for_each_network_role(Catalog& c, Fn&& fn) {
  fn("iot_radio", c.iot_radio);
  fn("access_point", c.access_point);
  fn("onu", c.onu);
  fn("olt", c.olt);
  fn("metro_switch", c.metro_switch);
  fn("metro_router_port", c.metro_router_port);
  fn("core_router_port", c.core_router_port);
  fn("transponder", c.transponder);
  fn("edfa", c.edfa);
  fn("optical_switch", c.optical_switch);
  fn("regenerator", c.regenerator);
  fn("access_fog_router", c.access_fog_router);
  fn("access_fog_switch", c.access_fog_switch);
  fn("metro_fog_router", c.metro_fog_router);
  fn("metro_fog_switch", c.metro_fog_switch);
  fn("dc_lan_router", c.dc_lan_router);
  fn("dc_lan_switch", c.dc_lan_switch);
}

template <typename Catalog, typename Fn>
void for_each_processor_role(Catalog& c, Fn&& fn) {
  fn("iot", c.iot_server);
  fn("cpe", c.cpe_server);
  fn("access_fog", c.access_fog_server);
  fn("metro_fog", c.metro_fog_server);
  fn("dc", c.dc_server);
}

}  // namespace detail

inline nlohmann::json catalog_to_json(const DeviceCatalog& catalog) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["delta_mips_per_mbps"] = catalog.delta_mips_per_mbps;
  j["pue"] = {{"iot", catalog.pue.iot},     {"cpe", catalog.pue.cpe},
              {"access", catalog.pue.access}, {"metro", catalog.pue.metro},
              {"dc", catalog.pue.dc},       {"core", catalog.pue.core}};
  j["core"] = {{"wavelength_gbps", catalog.core.wavelength_gbps},
               {"wavelengths_per_fiber", catalog.core.wavelengths_per_fiber},
               {"edfa_span_km", catalog.core.edfa_span_km},
               {"regenerator_span_km", catalog.core.regenerator_span_km}};
  detail::for_each_network_role(catalog,
                                [&](const char* name, const NetworkDeviceSpec& s) {
                                  detail::net_to_json(j["network"][name], s);
                                });
  detail::for_each_processor_role(catalog,
                                  [&](const char* name, const ProcessorSpec& s) {
                                    detail::proc_to_json(j["processors"][name], s);
                                  });
  return j;
}

/// Parses a catalog document. Fields absent from the document keep the
/// built-in Table 1-5 defaults; present fields are validated and a violation
/// raises std::runtime_error naming the offending field path.
inline DeviceCatalog load_catalog(const nlohmann::json& j) {
  DeviceCatalog c = default_catalog();
  if (j.contains("delta_mips_per_mbps")) {
    c.delta_mips_per_mbps = j.at("delta_mips_per_mbps").get<double>();
    if (c.delta_mips_per_mbps <= 0.0) {
      throw std::runtime_error("delta_mips_per_mbps: must be positive");
    }
  }
  if (j.contains("pue")) {
    const auto& p = j.at("pue");
    auto get = [&](const char* k, double& out) {
      if (p.contains(k)) out = p.at(k).get<double>();
      if (out < 1.0) {
        throw std::runtime_error(std::string("pue.") + k + ": must be >= 1");
      }
    };
    get("iot", c.pue.iot);
    get("cpe", c.pue.cpe);
    get("access", c.pue.access);
    get("metro", c.pue.metro);
    get("dc", c.pue.dc);
    get("core", c.pue.core);
  }
  if (j.contains("core")) {
    const auto& k = j.at("core");
    if (k.contains("wavelength_gbps"))
      c.core.wavelength_gbps = k.at("wavelength_gbps").get<double>();
    if (k.contains("wavelengths_per_fiber"))
      c.core.wavelengths_per_fiber = k.at("wavelengths_per_fiber").get<int>();
    if (k.contains("edfa_span_km"))
      c.core.edfa_span_km = k.at("edfa_span_km").get<double>();
    if (k.contains("regenerator_span_km"))
      c.core.regenerator_span_km = k.at("regenerator_span_km").get<double>();
    if (c.core.wavelength_gbps <= 0.0 || c.core.wavelengths_per_fiber <= 0 ||
        c.core.edfa_span_km <= 0.0 || c.core.regenerator_span_km <= 0.0) {
      throw std::runtime_error("core: constants must be positive");
    }
  }
  if (j.contains("network")) {
    const auto& n = j.at("network");
    detail::for_each_network_role(c, [&](const char* name, NetworkDeviceSpec& s) {
      if (n.contains(name)) {
        detail::net_from_json(n.at(name), s, std::string("network.") + name);
      }
    });
  }
  if (j.contains("processors")) {
    const auto& n = j.at("processors");
    detail::for_each_processor_role(c, [&](const char* name, ProcessorSpec& s) {
      if (n.contains(name)) {
        detail::proc_from_json(n.at(name), s, std::string("processors.") + name);
      }
    });
  }
  return c;
}

inline DeviceCatalog load_catalog(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("catalog parse error: ") + e.what());
  }
  return load_catalog(j);
}

}  // namespace cloudfog

#endif  // CLOUDFOG_CATALOG_HPP
