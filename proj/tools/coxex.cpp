#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "coxex/descriptor.hpp"
#include "coxex/enumeration.hpp"
#include "coxex/parabolic.hpp"
#include "coxex/parallel.hpp"
#include "coxex/repro.hpp"
#include "coxex/report.hpp"
#include "coxex/root_core.hpp"
#include "coxex/signed_perm.hpp"
#include "coxex/verify.hpp"

namespace {

struct GroupOptions {
  std::string type;
  int rank = 0;
  int m = 0;
  std::string group;

  coxex::CoxeterProduct product() const {
    if (!group.empty()) return coxex::parse_product(group);
    if (type.empty()) throw std::invalid_argument("give --type/--rank or --group");
    return {coxex::make_descriptor(type, rank, m)};
  }
};

void add_group_options(CLI::App* cmd, GroupOptions& g) {
  cmd->add_option("--type", g.type, "family: A B D I2 H3 H4 F4 E6 E7 E8");
  cmd->add_option("--rank", g.rank, "rank");
  cmd->add_option("--m", g.m, "dihedral parameter for I2");
  cmd->add_option("--group", g.group, "descriptor text such as B3, I2(5) or A2xA1");
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

/// Splits "A4,B3,I2(5)" without breaking inside parentheses.
std::vector<std::string> split_groups(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::uint64_t sweep_guard(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (std::getenv("COXEX_GUARD")) return coxex::default_guard();
  return coxex::kSweepGuard;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Excess and inverting involutions in finite Coxeter groups"};
  app.require_subcommand(1);

  // group info
  GroupOptions info_group;
  auto* group_cmd = app.add_subcommand("group", "root system facts");
  auto* info_cmd = group_cmd->add_subcommand("info", "positive roots, order, rank, longest length");
  group_cmd->require_subcommand(1);
  add_group_options(info_cmd, info_group);
  std::string info_cache;
  info_cmd->add_option("--cache", info_cache, "also write the root system JSON here");

  // excess
  GroupOptions excess_group;
  std::string element, format = "json", out;
  std::vector<std::string> parabolics;
  std::optional<std::uint64_t> guard;
  auto* excess_cmd = app.add_subcommand("excess", "excess report for one element");
  add_group_options(excess_cmd, excess_group);
  excess_cmd->add_option("--element", element, "cycle notation (A/B/D) or word [i j k]")->required();
  excess_cmd->add_option("--parabolic", parabolics, "1-based generator list, e.g. 2..12 or 1,3")
      ->take_all()
      ->expected(0, -1);
  excess_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  excess_cmd->add_option("--out", out, "output path");
  excess_cmd->add_option("--guard", guard, "largest group to enumerate");

  // verify
  GroupOptions verify_group;
  std::string groups, strategy = "all", verify_parabolic;
  std::vector<std::string> theorems;
  unsigned workers = coxex::default_workers();
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive theorem sweeps");
  add_group_options(verify_cmd, verify_group);
  verify_cmd->add_option("--groups", groups, "comma separated descriptors, e.g. A4,B3,I2(5)");
  verify_cmd->add_option("--theorem", theorems, "registry name or all")->take_all();
  verify_cmd->add_option("--strategy", strategy, "parabolics: all or maximal")
      ->check(CLI::IsMember({"all", "maximal"}));
  verify_cmd->add_option("--parabolic", verify_parabolic, "single explicit J (1-based list)");
  verify_cmd->add_option("--guard", guard, "largest group to sweep");
  verify_cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  verify_cmd->add_option("--out", out, "output path");
  bool list_theorems = false;
  verify_cmd->add_flag("--list", list_theorems, "print the theorem registry and exit");

  // repro
  std::string example;
  auto* repro_cmd = app.add_subcommand("repro", "recompute a worked example against golden values");
  repro_cmd->add_option("example", example, "d12, sym5-table or sym7-gap")->required();
  repro_cmd->add_option("--out", out, "output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (info_cmd->parsed()) {
      const auto product = info_group.product();
      const auto rs = coxex::build_root_system(product);
      nlohmann::json doc;
      doc["descriptor"] = rs.name();
      doc["rank"] = rs.rank();
      doc["positive_roots"] = rs.num_positive_roots();
      const auto order = coxex::group_order(product);
      doc["order"] = order == 0 ? nlohmann::json(nullptr) : nlohmann::json(order);
      doc["longest_length"] = coxex::length(rs, coxex::longest_element(rs));
      std::cout << doc.dump(2) << "\n";
      if (!info_cache.empty()) emit(coxex::root_system_to_json(rs).dump(1) + "\n", info_cache);
      return 0;
    }

    if (excess_cmd->parsed()) {
      const auto rs = coxex::build_root_system(excess_group.product());
      const auto w = coxex::parse_element(rs, element);
      std::vector<coxex::ParabolicContext> contexts;
      for (const auto& p : parabolics) {
        const auto gens = coxex::parse_generator_list(p);
        for (auto g : gens)
          if (g >= rs.rank()) throw std::invalid_argument("generator " + std::to_string(g + 1) + " out of range");
        contexts.push_back(coxex::parabolic_context(rs, gens));
      }
      const auto report = coxex::compute_excess_report(rs, w, contexts, guard.value_or(coxex::default_guard()));
      if (format == "csv") {
        std::string text = coxex::csv_header() + "\n";
        for (const auto& row : coxex::csv_rows(report)) text += row + "\n";
        emit(text, out);
      } else {
        emit(coxex::to_json(report).dump(2) + "\n", out);
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      if (list_theorems) {
        for (const auto& t : coxex::theorem_registry()) std::cout << t.name << "\t" << t.statement << "\n";
        return 0;
      }
      coxex::SuiteConfig config;
      if (!groups.empty())
        for (const auto& g : split_groups(groups)) config.groups.push_back(coxex::parse_product(g));
      else
        config.groups.push_back(verify_group.product());
      config.parabolics = strategy == "maximal" ? coxex::ParabolicSelection::maximal : coxex::ParabolicSelection::all;
      if (!verify_parabolic.empty()) {
        config.parabolics = coxex::ParabolicSelection::explicit_set;
        config.explicit_J = coxex::parse_generator_list(verify_parabolic);
      }
      for (const auto& t : theorems)
        for (const auto& name : split_list(t)) config.theorems.push_back(name);
      config.guard = sweep_guard(guard);
      config.workers = workers;
      const auto result = coxex::run_suite(config);
      emit(format == "csv" ? coxex::to_csv(result) : coxex::to_json(result).dump(2) + "\n", out);
      std::cerr << "failures: " << result.failures() << ", wall clock " << result.wall_clock_seconds << " s\n";
      return result.ok() ? 0 : 1;
    }

    if (repro_cmd->parsed()) {
      const auto result = coxex::run_repro(example);
      emit(coxex::to_json(result).dump(2) + "\n", out);
      for (const auto& c : result.checks)
        if (!c.pass)
          std::cerr << "MISMATCH " << c.name << "\n  expected: " << c.expected << "\n  observed: " << c.observed
                    << "\n";
      return result.ok() ? 0 : 1;
    }
  } catch (const coxex::GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
