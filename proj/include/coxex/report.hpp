#ifndef COXEX_REPORT_HPP
#define COXEX_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coxex/excess.hpp"
#include "coxex/parabolic.hpp"
#include "coxex/root_system.hpp"

namespace coxex {

/// Reads an element: signed cycle notation for A/B/D systems, or a word of
/// 1-based generator indices such as "[1 2 1]" for any system.
GroupElement parse_element(const RootSystem& rs, const std::string& text);

/// Cycle notation for A/B/D, otherwise a reduced word "[1 2 1]".
std::string format_element(const RootSystem& rs, const GroupElement& w);

/// True when I_w can be built from a centralizer coset instead of a sweep.
bool has_structured_path(const RootSystem& rs);

/// I_w by the structured path when available, otherwise by sweeping W.
InvolutionSet compute_inverting_involutions(const RootSystem& rs, const GroupElement& w, std::uint64_t guard);

struct ParabolicEntry {
  std::string J;
  std::size_t e_J = 0;
  std::size_t E_J = 0;
};

struct WitnessEntry {
  std::string x;
  std::string y;
  std::size_t defect = 0;
};

struct ExcessReport {
  std::string descriptor;
  std::string element;
  std::size_t length = 0;
  std::size_t reflection_length = 0;
  std::size_t excess = 0;
  std::size_t reflection_excess = 0;
  std::vector<ParabolicEntry> parabolic;
  std::vector<WitnessEntry> witnesses;
};

ExcessReport compute_excess_report(const RootSystem& rs, const GroupElement& w,
                                   const std::vector<ParabolicContext>& parabolics, std::uint64_t guard);

nlohmann::json to_json(const ExcessReport& report);
std::string csv_header();
/// One row per parabolic entry, or a single row with empty J columns.
std::vector<std::string> csv_rows(const ExcessReport& report);

inline constexpr int kRootSystemSchema = 1;

/// Cache document: descriptor, coordinates (exact fractions or decimal strings)
/// and generator tables.
nlohmann::json root_system_to_json(const RootSystem& rs);
/// Rebuilds and revalidates a cached root system.
RootSystem root_system_from_json(const nlohmann::json& doc);

}  // namespace coxex

#endif  // COXEX_REPORT_HPP
