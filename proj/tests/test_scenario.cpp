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

#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "cloudfog/scenario.hpp"

using namespace cloudfog;
using Catch::Approx;

TEST_CASE("savings arithmetic") {
  CHECK(savings(2.0, 100.0) == Approx(98.0));
  CHECK(savings(42.0, 42.0) == Approx(0.0));
  CHECK(savings(100.0, 50.0) == Approx(-100.0));  // worse than the baseline
  CHECK_THROWS_AS(savings(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("scenario layouts follow the use-case table") {
  Topology t = build_reference();
  CHECK(scenario_sources(make_scenario(ScenarioId::One), t).size() == 1);
  CHECK(scenario_sources(make_scenario(ScenarioId::Two), t).size() == 5);
  CHECK(scenario_sources(make_scenario(ScenarioId::Three), t).size() == 4);
  CHECK(scenario_sources(make_scenario(ScenarioId::Four), t).size() == 20);
  // scenario two draws every source from one group
  auto two = scenario_sources(make_scenario(ScenarioId::Two), t);
  for (NodeId id : two) CHECK(t.node(id).group == 0);
  // scenario three spreads one source per group
  auto three = scenario_sources(make_scenario(ScenarioId::Three), t);
  for (int g = 0; g < 4; ++g) CHECK(t.node(three[g]).group == g);
  // seed 0 lands in group 1
  auto one = scenario_sources(make_scenario(ScenarioId::One, 0), t);
  CHECK(t.node(one[0]).group == 0);
}

TEST_CASE("allocation shares sum to one hundred percent") {
  DeviceCatalog cat = default_catalog();
  Topology t = build_reference();
  Scenario s = make_scenario(ScenarioId::Three);
  s.sweep_mips = {2000};
  ScenarioResult r = run_scenario(s, t, cat);
  REQUIRE(r.rows.size() == 1);
  const AllocationShares& sh = r.rows[0].shares;
  CHECK(sh.iot + sh.cpe + sh.access_fog + sh.metro_fog + sh.cloud_dc ==
        Approx(100.0).epsilon(1e-9));
  // single local task: all on the IoT layer
  Scenario s1 = make_scenario(ScenarioId::One);
  s1.sweep_mips = {1000};
  ScenarioResult r1 = run_scenario(s1, t, cat);
  CHECK(r1.rows[0].shares.iot == Approx(100.0));
}

TEST_CASE("infeasible sweep points are recorded and the sweep continues") {
  DeviceCatalog cat = default_catalog();
  BuildOptions opt;
  opt.servers_dc = 1;  // cap the DC so a huge level cannot fit anywhere
  Topology t = build_reference(opt);
  Scenario s = make_scenario(ScenarioId::One);
  s.sweep_mips = {1000, 500000, 2000};
  ScenarioResult r = run_scenario(s, t, cat);
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0].feasible);
  CHECK_FALSE(r.rows[1].feasible);
  CHECK(r.rows[2].feasible);
}

TEST_CASE("csv emission") {
  DeviceCatalog cat = default_catalog();
  Topology t = build_reference();
  SECTION("empty result is header-only") {
    ScenarioResult r;
    r.scenario = "one";
    r.objective = "power";
    std::ostringstream os;
    emit_csv(r, os);
    CHECK(os.str() == std::string(kScenarioCsvHeader) + "\n");
  }
  SECTION("one row per sweep point, deterministic bytes") {
    Scenario s = make_scenario(ScenarioId::One);
    s.sweep_mips = {1000, 2000, 3000};
    ScenarioResult r = run_scenario(s, t, cat);
    std::ostringstream a, b;
    emit_csv(r, a);
    emit_csv(run_scenario(s, t, cat), b);
    CHECK(a.str() == b.str());
    int lines = 0;
    for (char c : a.str()) lines += c == '\n';
    CHECK(lines == 4);  // header + 3 rows
  }
}

TEST_CASE("json emission mirrors the csv columns") {
  DeviceCatalog cat = default_catalog();
  Topology t = build_reference();
  Scenario s = make_scenario(ScenarioId::One);
  s.sweep_mips = {1000, 2000};
  ScenarioResult r = run_scenario(s, t, cat);
  nlohmann::json rows = result_to_json(r);
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 2);
  // keys match the CSV header fields
  std::string header(kScenarioCsvHeader);
  std::stringstream hs(header);
  std::string col;
  while (std::getline(hs, col, ',')) {
    INFO("column " << col);
    CHECK(rows[0].contains(col == "status" ? "status" : col));
  }
  // round trip through the report path reproduces the table
  ScenarioResult back = result_from_json(rows);
  std::ostringstream a, b;
  emit_csv(r, a);
  emit_csv(back, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("scenario one allocation ladder") {
  DeviceCatalog cat = default_catalog();
  Topology t = build_reference();
  Scenario s = make_scenario(ScenarioId::One, 0);
  ScenarioResult r = run_scenario(s, t, cat);
  REQUIRE(r.rows.size() == 10);
  CHECK(r.rows[0].shares.iot == Approx(100.0));        // 1000 MIPS
  CHECK(r.rows[1].shares.cpe == Approx(100.0));        // 2000 MIPS
  for (size_t i = 2; i < r.rows.size(); ++i) {
    CHECK(r.rows[i].shares.access_fog == Approx(100.0));
  }
}
