/*
 * Copyright 2026 The semibv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include "semibv/error.hpp"
#include "semibv/report.hpp"

namespace semibv::cli {
namespace {

struct Options {
  std::string function, function_a, function_b, family_file, family_config, suite, method = "auto",
      out;
  std::optional<std::uint64_t> seed;
  std::size_t count = 100;
  double epsilon = 0.0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class Session {
public:
  explicit Session(const Options& o) : o_(o) {}

  void input(const std::string& name, const std::string& path) {
    inputs_.emplace_back(name, read_file(path));
  }
  const std::string& bytes(std::size_t k) const { return inputs_[k].second; }

  FamilyConfig config() {
    input("family_config", o_.family_config);
    FamilyConfig cfg = family_from_json(parse_json(inputs_.back().second));
    cfg.validate();
    return cfg;
  }

  std::optional<FamilyConfig> optional_config() {
    if (o_.family_config.empty()) return std::nullopt;
    return config();
  }

  Json report(std::string_view command, Json results, std::string_view status) const {
    return make_report(command, inputs_, std::move(results), status);
  }

private:
  const Options& o_;
  std::vector<ReportInput> inputs_;
};

int cmd_variation(const Options& o, Json& report) {
  Session s(o);
  s.input("function", o.function);
  const GridFunction2D f = load_function(s.bytes(0));
  const FamilyConfig cfg = s.config();
  const SupResult r = solve_sup(f, cfg, parse_method(o.method));
  Json results = sup_result_to_json(r);
  results["family"] = family_to_json(cfg);
  results["seed"] = o.seed.value_or(0);
  report = s.report("variation", std::move(results), "computed");
  return kExitOk;
}

int cmd_distance(const Options& o, Json& report) {
  Session s(o);
  s.input("function_a", o.function_a);
  s.input("function_b", o.function_b);
  const GridFunction2D f = load_function(s.bytes(0));
  const GridFunction2D g = load_function(s.bytes(1));
  require_same_domain(f, g);
  const FamilyConfig cfg = s.config();
  const SupResult r = solve_sup(f, g, cfg, parse_method(o.method));
  const double base = dist(f(0, 0), g(0, 0));
  Json results{{"rho", base + r.value},
               {"base_distance", base},
               {"joint_variation", sup_result_to_json(r)},
               {"family", family_to_json(cfg)},
               {"seed", o.seed.value_or(0)}};
  report = s.report("distance", std::move(results), "computed");
  return kExitOk;
}

int cmd_verify(const Options& o, Json& report) {
  Session s(o);
  const std::optional<FamilyConfig> only = s.optional_config();
  const SuiteReport r = run_suite(o.suite, *o.seed, o.count, only);
  const bool pass = r.pass();
  report = s.report("verify", suite_report_to_json(r), pass ? "pass" : "fail");
  return pass ? kExitOk : kExitFail;
}

int cmd_precompact(const Options& o, Json& report) {
  if (!(o.epsilon > 0.0) || !std::isfinite(o.epsilon)) throw ConfigError("--epsilon must be positive");
  Session s(o);
  s.input("family", o.family_file);
  const FunctionFamily family = load_family(s.bytes(0));
  const FamilyConfig cfg = s.config();
  const EpsilonNet net = build_epsilon_net(family, o.epsilon, cfg);
  Json results{{"epsilon", o.epsilon},
               {"family", family_to_json(cfg)},
               {"members", family.size()},
               {"net", net_to_json(net, family)},
               {"seed", o.seed.value_or(0)}};
  bool pass = false;
  if (net.certificate.holds) {
    const NetCheck check = verify_epsilon_net(family, net.centers, o.epsilon, cfg);
    results["verification"] = net_check_to_json(check);
    pass = check.ok;
  } else {
    results["verification"] = nullptr;
    results["note"] = "no witness found";
  }
  report = s.report("precompact", std::move(results), pass ? "pass" : "fail");
  return pass ? kExitOk : kExitFail;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Variation metrics for semigroup-valued functions of two variables", "semibv"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub, bool config_required) {
    auto* fc = sub->add_option("--family-config", o.family_config, "Family config JSON file");
    if (config_required) fc->required();
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--method", o.method, "auto|brute|bb|greedy|jordan");
    sub->add_option("--out", o.out, "Report file (default: standard output)");
  };

  auto* variation = app.add_subcommand("variation", "Supremum of the variation of one function");
  variation->add_option("--function", o.function, "Function JSON file")->required();
  common(variation, true);

  auto* distance = app.add_subcommand("distance", "rho distance between two functions");
  distance->add_option("--function-a", o.function_a, "First function JSON file")->required();
  distance->add_option("--function-b", o.function_b, "Second function JSON file")->required();
  common(distance, true);

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("--suite", o.suite, "axioms|lemmas|semigroup|search-oracle")->required();
  verify->add_option("--count", o.count, "Cases per family/instance");
  common(verify, false);
  verify->get_option("--seed")->required();

  auto* precompact = app.add_subcommand("precompact", "Witness search and epsilon-net for a family");
  precompact->add_option("--family-file", o.family_file, "Family JSON file")->required();
  precompact->add_option("--epsilon", o.epsilon, "Target epsilon")->required();
  common(precompact, true);

  std::vector<const char*> argv{"semibv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  Json report;
  int code = kExitOk;
  try {
    if (*variation) code = cmd_variation(o, report);
    else if (*distance) code = cmd_distance(o, report);
    else if (*verify) code = cmd_verify(o, report);
    else code = cmd_precompact(o, report);
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const std::string text = canonical_dump(report) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.out << "\n";
      return kExitInput;
    }
    file << text;
  }
  return code;
}

} // namespace semibv::cli
