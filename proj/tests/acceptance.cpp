/// Acceptance checks, one line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "coxex/enumeration.hpp"
#include "coxex/excess.hpp"
#include "coxex/parallel.hpp"
#include "coxex/repro.hpp"
#include "coxex/report.hpp"
#include "coxex/root_core.hpp"
#include "coxex/verify.hpp"
#include "oracles.hpp"

using namespace coxex;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome from_repro(const std::string& id) {
  const auto r = run_repro(id);
  Outcome o{r.ok(), std::to_string(r.checks.size()) + " checks"};
  for (const auto& c : r.checks)
    if (!c.pass) o.detail += "; " + c.name + " expected " + c.expected + " got " + c.observed;
  return o;
}

Outcome sweep(const std::vector<std::string>& groups, const std::vector<std::string>& theorems,
              ParabolicSelection parabolics = ParabolicSelection::all) {
  SuiteConfig c;
  for (const auto& g : groups) c.groups.push_back(parse_product(g));
  c.theorems = theorems;
  c.parabolics = parabolics;
  c.workers = default_workers();
  const auto r = run_suite(c);
  std::size_t checked = 0;
  for (const auto& t : r.tallies) checked += t.checked;
  Outcome o{r.ok() && checked > 0, std::to_string(checked) + " checked, " + std::to_string(r.failures()) + " failed"};
  for (const auto& cex : r.counterexamples)
    o.detail += "; " + cex.theorem + " " + cex.descriptor + " " + cex.element + " " + cex.parabolic;
  return o;
}

Outcome combine(std::vector<Outcome> parts) {
  Outcome o{true, {}};
  for (const auto& p : parts) {
    o.pass = o.pass && p.pass;
    if (!o.detail.empty()) o.detail += " | ";
    o.detail += p.detail;
  }
  return o;
}

Outcome three_cycle_needs_several_involutions() {
  const auto rs = build_root_system(parse_descriptor("A4"));
  const auto w = parse_element(rs, "(+2 +3 +5)");
  const auto iw = inverting_involutions(rs, w, enumerate_group(rs).elements);
  const auto nw = inversion_set(rs, w);
  for (const auto& x : iw.elements)
    if (nw.is_subset_of(inversion_set(rs, x))) return {false, "single x covers N(w): " + format_element(rs, x)};
  return {nw.is_subset_of(n_of_inverting_set(rs, w, iw)), "|I_w|=" + std::to_string(iw.size())};
}

Outcome reflection_length_oracle() {
  std::size_t compared = 0;
  for (const char* name : {"A3", "B3", "I2(5)"}) {
    const auto rs = build_root_system(parse_descriptor(name));
    const auto g = enumerate_group(rs);
    const auto bfs = oracle::bfs_reflection_lengths(rs, g.elements);
    for (std::size_t i = 0; i < g.size(); ++i, ++compared)
      if (reflection_length(rs, g.elements[i]) != bfs[i])
        return {false, std::string(name) + " " + format_element(rs, g.elements[i])};
  }
  return {true, std::to_string(compared) + " elements"};
}

Outcome product_inversion_identity() {
  std::mt19937_64 rng(20240607);
  std::size_t pairs = 0;
  for (const char* name : {"A4", "B4", "D4", "H3", "F4", "I2(7)"}) {
    const auto rs = build_root_system(parse_descriptor(name));
    const auto g = enumerate_group(rs);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    for (int trial = 0; trial < 10000; ++trial, ++pairs) {
      const auto& a = g.elements[pick(rng)];
      const auto& b = g.elements[pick(rng)];
      const auto a_inv = invert(a);
      const auto nb = inversion_set(rs, b);
      const auto na_inv = inversion_set(rs, a_inv);
      InversionSet expected = inversion_set(rs, a);
      for (auto i : nb.indices()) {
        const auto img = a_inv.act(SignedRoot::negative(i));
        if (!img.is_negative()) expected.erase(img.index());
      }
      for (auto i : (nb - na_inv).indices()) expected.insert(a_inv.act(SignedRoot::positive(i)).index());
      if (inversion_set(rs, compose(a, b)) != expected) return {false, std::string(name) + " pair mismatch"};
    }
  }
  return {true, std::to_string(pairs) + " pairs"};
}

}  // namespace

int main() {
  const std::vector<std::string> small{"A4", "B3", "B4", "D4", "H3", "I2(5)", "I2(6)", "I2(7)", "I2(8)"};
  struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"sym5_inversion_table", 1, [] { return from_repro("sym5-table"); }},
      {"d12_long_cycle_example", 5, [] { return from_repro("d12"); }},
      {"reflection_excess_parabolic_invariance", 600, [&] { return sweep(small, {"parabolic-reflection-excess"}); }},
      {"excess_parabolic_invariance", 600,
       [] {
         return combine({sweep({"A4", "B3", "B4", "H3", "I2(5)", "I2(6)", "I2(7)", "I2(8)"}, {"parabolic-excess"}),
                         sweep({"F4"}, {"parabolic-excess"}, ParabolicSelection::maximal)});
       }},
      {"inverting_involutions_cover_inversions", 600,
       [&] {
         auto groups = small;
         groups.insert(groups.end(), {"A2", "B2"});
         return combine({sweep(groups, {"nw-subset-niw"}), sweep(groups, {"cuspidal-niw-full"}),
                         sweep({"B3", "D4"}, {"centre-niw-full"})});
       }},
      {"inversion_cover_gap_examples", 600,
       [] { return combine({from_repro("sym7-gap"), three_cycle_needs_several_involutions()}); }},
      {"spartan_pair_structure", 600,
       [] {
         return combine({sweep({"A4", "B4"}, {"spartan-support", "spartan-overlap", "spartan-swapcycle"}),
                         sweep({"D4", "D5"}, {"spartan-support", "dn-split-excess"})});
       }},
      {"oracle_equivalences", 600,
       [] {
         return combine({sweep({"B4", "D4"}, {"structured-iw"}), reflection_length_oracle(),
                         product_inversion_identity()});
       }},
  };

  int failed = 0;
  for (const auto& [name, budget, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budget) {
      o.pass = false;
      o.detail += " over the " + std::to_string(static_cast<int>(budget)) + "s budget";
    }
    std::printf("%s %s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
