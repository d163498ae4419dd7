#ifndef COXEX_REPRO_HPP
#define COXEX_REPRO_HPP

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace coxex {

struct ReproCheck {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct ReproResult {
  std::string id;
  std::vector<ReproCheck> checks;
  /// Computed values without a golden counterpart.
  std::vector<std::pair<std::string, std::string>> notes;

  bool ok() const;
};

/// Example ids accepted by run_repro.
const std::vector<std::string>& repro_ids();

/// Recomputes an example and compares it with its embedded golden values.
/// Throws std::invalid_argument for unknown ids.
ReproResult run_repro(const std::string& id);

nlohmann::json to_json(const ReproResult& result);

}  // namespace coxex

#endif  // COXEX_REPRO_HPP
