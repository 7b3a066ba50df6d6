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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cloudfog/cloudfog.hpp"

namespace {

struct CommonConfig {
  std::string config_path;
  cloudfog::DeviceCatalog catalog;
  cloudfog::BuildOptions build;

  void load() {
    catalog = cloudfog::default_catalog();
    build = cloudfog::BuildOptions{};
    if (config_path.empty()) return;
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config " + config_path);
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.contains("catalog")) catalog = cloudfog::load_catalog(j.at("catalog"));
    if (j.contains("topology")) {
      build = cloudfog::build_options_from_json(j.at("topology"));
    }
  }
};

cloudfog::ObjectiveKind parse_objective(const std::string& s) {
  using K = cloudfog::ObjectiveKind;
  if (s == "power") return K::PowerOnly;
  if (s == "propagation") return K::PropagationOnly;
  if (s == "queuing") return K::QueuingOnly;
  if (s == "power+propagation") return K::PowerPropagation;
  if (s == "power+queuing") return K::PowerQueuing;
  if (s == "power+propagation+queuing") return K::PowerPropagationQueuing;
  throw CLI::ValidationError("objective", "unknown objective " + s);
}

std::optional<cloudfog::Weights> parse_weights(const std::string& s) {
  if (s.empty()) return std::nullopt;
  cloudfog::Weights w;
  if (std::sscanf(s.c_str(), "%lf,%lf,%lf", &w.alpha, &w.beta, &w.gamma) != 3) {
    throw CLI::ValidationError("weights", "expected a,b,g");
  }
  return w;
}

void write_or_stdout(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cloudfog: joint network/processing power and delay model for five-layer "
      "cloud-fog task placement"};
  app.require_subcommand(1);

  CommonConfig cfg;
  std::string scenario_name = "one";
  std::string objective_name = "";
  std::string weights_arg;
  std::string output;
  std::string format = "csv";
  unsigned seed = 0;
  std::string sweep_arg;

  CLI::App* run = app.add_subcommand("run", "run a scenario sweep");
  run->add_option("--scenario", scenario_name,
                  "one|two|three|four|eval-one|eval-two")
      ->capture_default_str();
  run->add_option("--objective", objective_name,
                  "power|propagation|queuing|power+propagation|power+queuing|"
                  "power+propagation+queuing (default per scenario)");
  run->add_option("--weights", weights_arg, "objective weights a,b,g");
  run->add_option("--sweep", sweep_arg,
                  "comma separated per-task MIPS levels (default 1000..10000)");
  run->add_option("--seed", seed, "scenario seed")->capture_default_str();
  run->add_option("--config", cfg.config_path, "catalog/topology override file");
  run->add_option("-o,--output", output, "output path (default stdout)");
  run->add_option("--format", format, "csv|json")->capture_default_str();

  std::string lp_out;
  int lp_sources = 1;
  int lp_mips = 1000;
  CLI::App* export_lp = app.add_subcommand("export-lp", "export the MILP in LP format");
  export_lp->add_option("--scenario", scenario_name, "scenario layout")
      ->capture_default_str();
  export_lp->add_option("--objective", objective_name, "objective case");
  export_lp->add_option("--weights", weights_arg, "objective weights a,b,g");
  export_lp->add_option("--mips", lp_mips, "per-task MIPS")->capture_default_str();
  export_lp->add_option("--seed", seed, "scenario seed")->capture_default_str();
  export_lp->add_option("--config", cfg.config_path, "override file");
  export_lp->add_option("-o,--output", lp_out, "output path (default stdout)");
  (void)lp_sources;

  std::string solution_path;
  CLI::App* validate = app.add_subcommand("validate", "check a solution dump");
  validate->add_option("solution", solution_path, "solution JSON file")
      ->required();
  validate->add_option("--scenario", scenario_name, "scenario layout")
      ->capture_default_str();
  validate->add_option("--objective", objective_name, "objective case");
  validate->add_option("--config", cfg.config_path, "override file");

  std::string report_path;
  CLI::App* report = app.add_subcommand("report", "re-render CSV from a JSON dump");
  report->add_option("dump", report_path, "result JSON file")->required();
  report->add_option("-o,--output", output, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.load();
    cloudfog::Topology topo = cloudfog::build_reference(cfg.build);

    if (report->parsed()) {
      std::ifstream in(report_path);
      if (!in) throw std::runtime_error("cannot open " + report_path);
      nlohmann::json j = nlohmann::json::parse(in);
      cloudfog::ScenarioResult r = cloudfog::result_from_json(j);
      std::ostringstream os;
      cloudfog::emit_csv(r, os);
      write_or_stdout(output, os.str());
      return 0;
    }

    auto id = cloudfog::scenario_from_name(scenario_name);
    if (!id) throw std::runtime_error("unknown scenario " + scenario_name);
    cloudfog::Scenario sc = cloudfog::make_scenario(*id, seed);
    if (!objective_name.empty()) sc.objective = parse_objective(objective_name);
    sc.weights = parse_weights(weights_arg);
    if (!sweep_arg.empty()) {
      sc.sweep_mips.clear();
      std::stringstream ss(sweep_arg);
      std::string tok;
      while (std::getline(ss, tok, ',')) sc.sweep_mips.push_back(std::stoi(tok));
    }

    if (run->parsed()) {
      cloudfog::ScenarioResult r = cloudfog::run_scenario(sc, topo, cfg.catalog);
      std::ostringstream os;
      if (format == "json") {
        cloudfog::emit_json(r, os);
      } else {
        cloudfog::emit_csv(r, os);
      }
      write_or_stdout(output, os.str());
      bool any_ok = false;
      for (const auto& row : r.rows) any_ok |= row.feasible;
      if (!any_ok) {
        std::cerr << R"({"error":"infeasible","detail":"every sweep point infeasible"})"
                  << "\n";
        return 2;
      }
      return 0;
    }

    if (export_lp->parsed()) {
      std::vector<cloudfog::NodeId> sources = cloudfog::scenario_sources(sc, topo);
      cloudfog::PlacementProblem problem;
      problem.topology = &topo;
      problem.catalog = &cfg.catalog;
      problem.objective = sc.objective;
      problem.weights = sc.weights;
      for (cloudfog::NodeId src : sources) {
        problem.demands.push_back(cloudfog::TaskRequest{
            src, static_cast<double>(lp_mips),
            lp_mips / cfg.catalog.delta_mips_per_mbps});
      }
      cloudfog::Weights w{1.0, 0.0, 0.0};
      if (problem.delay_aware() || problem.weights) {
        cloudfog::PlacementSolution base = cloudfog::baseline_cloud(problem);
        w = cloudfog::resolve_weights(
            problem, base.power.total(),
            base.delays.total_propagation_s + base.delays.total_queuing_s);
      }
      cloudfog::MilpModel model = cloudfog::formulate(problem, w);
      write_or_stdout(lp_out, cloudfog::emit_lp(model));
      return 0;
    }

    if (validate->parsed()) {
      std::ifstream in(solution_path);
      if (!in) throw std::runtime_error("cannot open " + solution_path);
      nlohmann::json j = nlohmann::json::parse(in);
      auto [demands, assignment] = cloudfog::solution_from_json(j);
      cloudfog::PlacementProblem problem;
      problem.topology = &topo;
      problem.catalog = &cfg.catalog;
      problem.demands = demands;
      if (!objective_name.empty()) {
        problem.objective = parse_objective(objective_name);
      }
      cloudfog::PlacementSolution sol = cloudfog::evaluate_assignment(
          problem, assignment, cloudfog::Weights{1.0, 0.0, 0.0});
      auto violations = cloudfog::check_feasible(sol, problem);
      if (violations.empty()) {
        std::cout << "feasible: all constraints satisfied\n";
        return 0;
      }
      for (const auto& v : violations) {
        std::cout << v.constraint << " " << v.detail << "\n";
      }
      return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
