#ifndef COXEX_VERIFY_HPP
#define COXEX_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coxex/enumeration.hpp"
#include "coxex/excess.hpp"
#include "coxex/parabolic.hpp"
#include "coxex/root_system.hpp"

namespace coxex {

/// Sweeps refuse groups larger than this unless the guard is raised.
inline constexpr std::uint64_t kSweepGuard = 1'000'000;

enum class ParabolicSelection { all, maximal, explicit_set };

struct SuiteConfig {
  std::vector<CoxeterProduct> groups;
  ParabolicSelection parabolics = ParabolicSelection::all;
  /// 0-based generators for ParabolicSelection::explicit_set.
  std::vector<std::size_t> explicit_J;
  /// Registry names; empty or {"all"} selects every theorem.
  std::vector<std::string> theorems;
  std::uint64_t guard = kSweepGuard;
  unsigned workers = 1;
};

/// Per-element data shared by every check on one group.
struct ElementRecord {
  GroupElement w;
  std::size_t length = 0;
  std::size_t reflection_length = 0;
  InvolutionSet iw;
  InvolutionSet jw;
  std::size_t e = 0;
  std::size_t E = 0;
  std::vector<SpartanPair> spartan;
  /// (parabolic index, e_J, E_J) for every selected J with w in W_J.
  struct Restricted {
    std::size_t parabolic;
    std::size_t e_J;
    std::size_t E_J;
  };
  std::vector<Restricted> restricted;
};

class GroupData {
 public:
  GroupData(const CoxeterProduct& product, const SuiteConfig& config);

  const RootSystem& root_system() const { return rs_; }
  const GroupEnumeration& enumeration() const { return group_; }
  const std::vector<ElementRecord>& records() const { return records_; }
  const std::vector<ParabolicContext>& parabolics() const { return parabolics_; }
  /// Split point m of parabolic p, if p has the form Sym(1..m) x W(m+1..n).
  std::optional<std::size_t> split_of(std::size_t p) const { return splits_[p]; }
  const std::vector<std::vector<std::size_t>>& conjugacy_classes() const;
  bool has_nontrivial_centre() const { return nontrivial_centre_; }
  std::string label(std::size_t w) const;

 private:
  RootSystem rs_;
  GroupEnumeration group_;
  std::vector<ElementRecord> records_;
  std::vector<ParabolicContext> parabolics_;
  std::vector<std::optional<std::size_t>> splits_;
  mutable std::vector<std::vector<std::size_t>> classes_;
  bool nontrivial_centre_ = false;
};

enum class Domain { elements, element_parabolic, spartan_pairs, split_spartan_pairs, conjugacy_classes };
enum class Verdict { check, observe, skip };

/// One unit a theorem is evaluated on.
struct Item {
  const GroupData* group = nullptr;
  std::size_t w = 0;
  std::optional<std::size_t> parabolic;
  const SpartanPair* pair = nullptr;
  std::size_t klass = 0;

  const ElementRecord& record() const { return group->records()[w]; }
  const RootSystem& rs() const { return group->root_system(); }
  const ElementRecord::Restricted* restricted() const;
};

/// A registry entry: which groups it applies to, which items satisfy the
/// hypothesis (or are only observed), and the conclusion to test.
struct Theorem {
  std::string name;
  std::string statement;
  Domain domain = Domain::elements;
  std::function<bool(const GroupData&)> applies;
  std::function<Verdict(const Item&)> hypothesis;
  std::function<bool(const Item&)> conclusion;
  /// Observed and expected values for counterexample reports.
  std::function<std::pair<std::string, std::string>(const Item&)> describe;
  /// Parabolics needed by the domain.
  bool needs_parabolics = false;
};

const std::vector<Theorem>& theorem_registry();
const Theorem& find_theorem(const std::string& name);

struct Counterexample {
  std::string theorem;
  std::string descriptor;
  std::string element;
  std::string parabolic;
  std::string observed;
  std::string expected;
};

struct TheoremTally {
  std::string theorem;
  std::string descriptor;
  bool applicable = true;
  std::size_t checked = 0;
  std::size_t failures = 0;
  /// Items outside the asserted hypothesis that were evaluated anyway.
  std::size_t observed = 0;
  std::size_t gaps = 0;
};

struct SuiteResult {
  std::vector<TheoremTally> tallies;
  std::vector<Counterexample> counterexamples;
  /// Conclusion failures on observed items; never counted as failures.
  std::vector<Counterexample> gaps;
  double wall_clock_seconds = 0;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

/// Sweeps every configured group; deterministic for any worker count.
SuiteResult run_suite(const SuiteConfig& config);

/// Sweeps one prepared group.
void run_theorems(const GroupData& group, const std::vector<const Theorem*>& theorems, unsigned workers,
                  SuiteResult& result);

std::vector<const Theorem*> select_theorems(const std::vector<std::string>& names);

/// Report payload; timing stays outside it.
nlohmann::json to_json(const SuiteResult& result);
std::string to_csv(const SuiteResult& result);

}  // namespace coxex

#endif  // COXEX_VERIFY_HPP
