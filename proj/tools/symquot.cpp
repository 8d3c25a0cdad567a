#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "symquot/a1_model.hpp"
#include "symquot/analysis.hpp"
#include "symquot/catalog.hpp"
#include "symquot/error.hpp"
#include "symquot/group_file.hpp"

namespace {

constexpr int kInputError = 2;
constexpr int kConsistencyError = 3;

symquot::Representation load(const std::string& source, std::size_t max_order) {
  const std::string prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) return symquot::catalog(source.substr(prefix.size()), max_order);
  return symquot::to_representation(symquot::load_group_file(source), max_order);
}

int run_a1(std::size_t max_degree, bool as_json) {
  using namespace symquot::a1;
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["max_degree"] = max_degree;
  nlohmann::ordered_json dims = nlohmann::ordered_json::array();
  for (std::size_t d = 0; d <= max_degree; ++d) dims.push_back(hilbert_dim(d));
  j["hilbert_dims"] = dims;
  nlohmann::ordered_json powers = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k <= max_degree; ++k) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t d = 0; d <= max_degree; ++d) row.push_back(ideal_power_dims(k, d));
    powers.push_back(row);
  }
  j["ideal_power_dims"] = powers;
  const bool commutators = sl2_commutators_check(max_degree);
  j["sl2_commutators"] = commutators;
  nlohmann::ordered_json ideals = nlohmann::ordered_json::array();
  if (max_degree >= 1) {
    for (const auto& i : sl2_invariant_ideals(max_degree)) ideals.push_back(i.label());
  }
  j["invariant_ideals"] = ideals;

  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "dim A_d:";
    for (const auto& x : dims) std::cout << " " << x;
    std::cout << "\ndim (m^k)_d, rows k = 0.." << max_degree << ":\n";
    for (const auto& row : powers) {
      std::cout << " ";
      for (const auto& x : row) std::cout << " " << x;
      std::cout << "\n";
    }
    std::cout << "sl(2) commutators: " << (commutators ? "exact" : "FAILED") << "\n";
    std::cout << "sl(2)-invariant ideals:";
    for (const auto& x : ideals) std::cout << " " << x.get<std::string>();
    std::cout << "\n";
  }
  return commutators ? 0 : kConsistencyError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of symplectic doubles of finite matrix groups"};
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a group file or catalog:NAME");
  std::string source;
  bool as_json = false;
  std::size_t max_order = symquot::kDefaultMaxOrder;
  symquot::AnalysisOptions options;
  analyze_cmd->add_option("source", source, "Group file path or catalog:NAME")->required();
  analyze_cmd->add_flag("--json", as_json, "Print the JSON report");
  analyze_cmd->add_option("--max-order", max_order, "Abort enumeration past this order")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--molien-degree", options.molien_degree, "Molien series truncation degree");
  analyze_cmd->add_flag("--slices", options.slice_details, "Include per-stratum slice models");

  auto* a1_cmd = app.add_subcommand("a1", "Check the quadric cone model");
  std::size_t max_degree = 8;
  bool a1_json = false;
  a1_cmd->add_option("--max-degree", max_degree, "Truncation degree")->check(CLI::Range(0, 16));
  a1_cmd->add_flag("--json", a1_json, "Print JSON");

  auto* catalog_cmd = app.add_subcommand("catalog", "Built-in groups");
  bool list = false;
  catalog_cmd->add_flag("--list", list, "List the catalog families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*analyze_cmd) {
      const auto report = symquot::analyze(load(source, max_order), options);
      if (as_json) {
        std::cout << symquot::to_json(report).dump(2) << "\n";
      } else {
        std::cout << symquot::to_text(report);
      }
      return 0;
    }
    if (*a1_cmd) return run_a1(max_degree, a1_json);
    if (*catalog_cmd) {
      std::cout << "weyl:A{n}      n = 1..8\n"
                   "weyl:B{n}      n = 1..6\n"
                   "weyl:D{n}      n = 2..6\n"
                   "weyl:G2\n"
                   "cyclic:{m}     m = 1..1000\n"
                   "symmetric:{n}  n = 1..8\n"
                   "neg2d\n";
      return 0;
    }
  } catch (const symquot::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const symquot::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const symquot::ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kConsistencyError;
  }
  return 0;
}
