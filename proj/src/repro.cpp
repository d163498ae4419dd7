#include "coxex/repro.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "coxex/excess.hpp"
#include "coxex/parabolic.hpp"
#include "coxex/report.hpp"
#include "coxex/root_core.hpp"
#include "coxex/signed_perm.hpp"

namespace coxex {

namespace {

std::string join(const std::set<std::string>& items) {
  std::string out = "{";
  bool first = true;
  for (const auto& s : items) {
    if (!first) out += ", ";
    out += s;
    first = false;
  }
  return out + "}";
}

std::set<std::string> labels(const RootSystem& rs, const InversionSet& n) {
  std::set<std::string> out;
  for (std::size_t i : n.indices()) out.insert(rs.root_label(i));
  return out;
}

void expect(ReproResult& r, std::string name, const std::string& expected, const std::string& observed) {
  r.checks.push_back({std::move(name), expected, observed, expected == observed});
}

void expect(ReproResult& r, std::string name, std::size_t expected, std::size_t observed) {
  expect(r, std::move(name), std::to_string(expected), std::to_string(observed));
}

void expect(ReproResult& r, std::string name, bool observed) {
  expect(r, std::move(name), std::string("true"), std::string(observed ? "true" : "false"));
}

ReproResult repro_d12() {
  ReproResult r{"d12", {}, {}};
  const RootSystem rs = build_root_system(make_descriptor("D", 12));
  const auto w_sp = parse_signed_permutation("(+2 +4 +6 +8 +10 -12 +11 +9 +7 +5 -3)", 12);
  const auto x_sp = parse_signed_permutation("(-1)(+2 +3)(+4 +5)(+6 +7)(+8 +9)(+10 +11)(-12)", 12);
  const auto y_sp = parse_signed_permutation("(-1)(-2)(+3 +4)(+5 +6)(+7 +8)(+9 +10)(+11 +12)", 12);
  const GroupElement w = to_root_perm(w_sp, rs);
  const GroupElement x = to_root_perm(x_sp, rs);
  const GroupElement y = to_root_perm(y_sp, rs);

  expect(r, "w positive", is_positive(w_sp));
  expect(r, "x^2 = 1", is_involution(x));
  expect(r, "y^2 = 1", is_involution(y));
  expect(r, "xy = w", compose(x, y) == w);
  expect(r, "2|N(x) & N(y)|", 46, 2 * (inversion_set(rs, x) & inversion_set(rs, y)).count());
  expect(r, "l(x) + l(y) - l(w)", 46, length(rs, x) + length(rs, y) - length(rs, w));

  // 4 6 8 10 3456789 10 11 12 10 987654323579 11, generator 10 at the branch
  std::vector<std::size_t> word;
  for (std::size_t g : {4, 6, 8, 10, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 10, 9, 8, 7, 6, 5, 4, 3, 2, 3, 5, 7, 9, 11})
    word.push_back(g - 1);
  expect(r, "word letters", 28, word.size());
  expect(r, "word evaluates to w", element_from_word(rs, word) == w);
  expect(r, "l(w)", 28, length(rs, w));

  const auto structured = inverting_involutions_structured(w_sp, rs);
  const auto& iw = structured.set;
  expect(r, "|C_B(w)|", 44, structured.coset_size);
  expect(r, "x in I_w", std::binary_search(iw.elements.begin(), iw.elements.end(), x));
  expect(r, "y in I_w", std::binary_search(iw.elements.begin(), iw.elements.end(), y));
  const auto e = excess(rs, w, iw, true);
  expect(r, "e(w)", 46, e.value);

  std::vector<std::size_t> gens;
  for (std::size_t g = 1; g < 12; ++g) gens.push_back(g);
  const auto ctx = parabolic_context(rs, gens);
  expect(r, "w in W_J, J = 2..12", ctx.contains(rs, w));
  const auto eJ = parabolic_excess(rs, w, iw, ctx, true);
  expect(r, "e_J(w)", 60, eJ.value);
  if (!eJ.witnesses.empty())
    r.notes.emplace_back("e_J witness", format_element(rs, eJ.witnesses.front().x) + " * " +
                                            format_element(rs, eJ.witnesses.front().y));
  return r;
}

struct TableRow {
  const char* x;
  std::set<std::string> n;
};

ReproResult repro_sym5() {
  ReproResult r{"sym5-table", {}, {}};
  const RootSystem rs = build_root_system(make_descriptor("A", 4));
  const GroupElement w = parse_element(rs, "(+2 +3 +5)");
  expect(r, "N(w)", join({"e2-e5", "e3-e4", "e3-e5", "e4-e5"}), join(labels(rs, inversion_set(rs, w))));

  const std::vector<TableRow> golden = {
      {"(+2 +3)", {"e2-e3"}},
      {"(+3 +5)", {"e3-e4", "e3-e5", "e4-e5"}},
      {"(+2 +5)", {"e2-e3", "e2-e4", "e2-e5", "e3-e5", "e4-e5"}},
      {"(+1 +4)(+2 +3)", {"e1-e2", "e1-e3", "e1-e4", "e2-e3", "e2-e4", "e3-e4"}},
      {"(+1 +4)(+3 +5)", {"e1-e2", "e1-e3", "e1-e4", "e2-e4", "e3-e4", "e3-e5"}},
      {"(+1 +4)(+2 +5)", {"e1-e3", "e1-e4", "e1-e5", "e2-e3", "e2-e4", "e2-e5", "e3-e4", "e3-e5"}},
  };

  const InvolutionSet iw = compute_inverting_involutions(rs, w, 1'000'000);
  std::set<std::string> computed, expected;
  for (const auto& x : iw.elements) computed.insert(format_element(rs, x));
  for (const auto& row : golden) expected.insert(format_element(rs, parse_element(rs, row.x)));
  expect(r, "I_w", join(expected), join(computed));

  for (const auto& row : golden) {
    const GroupElement x = parse_element(rs, row.x);
    expect(r, "N" + format_element(rs, x), join(row.n), join(labels(rs, inversion_set(rs, x))));
  }

  const auto nw = inversion_set(rs, w);
  bool none_covers = true;
  for (const auto& x : iw.elements)
    if (nw.is_subset_of(inversion_set(rs, x))) none_covers = false;
  expect(r, "no x in I_w with N(w) inside N(x)", none_covers);
  return r;
}

ReproResult repro_sym7() {
  ReproResult r{"sym7-gap", {}, {}};
  const RootSystem rs = build_root_system(make_descriptor("A", 6));
  const GroupElement w = parse_element(rs, "(+1 +2 +3 +4)(+5 +6 +7)");
  const InvolutionSet iw = compute_inverting_involutions(rs, w, 1'000'000);
  const auto niw = n_of_inverting_set(rs, w, iw);
  const auto root = rs.find_label("e4-e5");
  expect(r, "e4-e5 is a root", root.has_value());
  expect(r, "e4-e5 not in N(I_w)", root && !niw.contains(*root));
  expect(r, "N(w) inside N(I_w)", inversion_set(rs, w).is_subset_of(niw));
  return r;
}

}  // namespace

bool ReproResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReproCheck& c) { return c.pass; });
}

const std::vector<std::string>& repro_ids() {
  static const std::vector<std::string> ids{"d12", "sym5-table", "sym7-gap"};
  return ids;
}

ReproResult run_repro(const std::string& id) {
  if (id == "d12") return repro_d12();
  if (id == "sym5-table") return repro_sym5();
  if (id == "sym7-gap") return repro_sym7();
  throw std::invalid_argument("unknown example '" + id + "'");
}

nlohmann::json to_json(const ReproResult& result) {
  nlohmann::json doc;
  doc["example"] = result.id;
  doc["ok"] = result.ok();
  doc["checks"] = nlohmann::json::array();
  for (const auto& c : result.checks)
    doc["checks"].push_back({{"check", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}});
  doc["notes"] = nlohmann::json::object();
  for (const auto& [k, v] : result.notes) doc["notes"][k] = v;
  return doc;
}

}  // namespace coxex
