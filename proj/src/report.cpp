#include "coxex/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "coxex/enumeration.hpp"
#include "coxex/root_core.hpp"
#include "coxex/signed_perm.hpp"

namespace coxex {

namespace {

bool is_abd(const RootSystem& rs) {
  if (!rs.is_irreducible()) return false;
  const Family f = rs.descriptor().family;
  return f == Family::A || f == Family::B || f == Family::D;
}

std::vector<std::size_t> parse_word(const RootSystem& rs, const std::string& text) {
  std::string body = text;
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw ParseError("word must be written as [i j k]: " + text);
  body = body.substr(1, body.size() - 2);
  for (char& c : body)
    if (c == ',' || c == '.') c = ' ';
  std::istringstream in(body);
  std::vector<std::size_t> word;
  std::string token;
  while (in >> token) {
    if (!std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError("bad generator index '" + token + "'");
    const std::size_t r = std::stoul(token);
    if (r == 0 || r > rs.rank()) throw ParseError("generator " + token + " out of range for " + rs.name());
    word.push_back(r - 1);
  }
  return word;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class T>
std::string scalar_text(const T& x) {
  if constexpr (std::is_same_v<T, Rational>) {
    return to_string(x);
  } else {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  }
}

template <class T>
T scalar_from(const std::string& s) {
  if constexpr (std::is_same_v<T, Rational>) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } else {
    return std::stod(s);
  }
}

template <class T>
nlohmann::json matrix_json(const Matrix<T>& m) {
  auto out = nlohmann::json::array();
  for (const auto& row : m) {
    auto r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(scalar_text(x));
    out.push_back(std::move(r));
  }
  return out;
}

template <class T>
Matrix<T> matrix_from(const nlohmann::json& j) {
  Matrix<T> m;
  for (const auto& row : j) {
    Vector<T> r;
    for (const auto& x : row) r.push_back(scalar_from<T>(x.get<std::string>()));
    m.push_back(std::move(r));
  }
  return m;
}

template <class T>
void realization_json(const Realization<T>& real, nlohmann::json& doc) {
  doc["dimension"] = real.dimension;
  doc["gram"] = matrix_json(real.gram);
  doc["roots"] = matrix_json(real.roots);
  doc["coefficients"] = matrix_json(real.coefficients);
  auto refl = nlohmann::json::array();
  for (const auto& m : real.reflections) refl.push_back(matrix_json(m));
  doc["reflections"] = std::move(refl);
}

template <class T>
Realization<T> realization_from(const nlohmann::json& doc) {
  Realization<T> real;
  real.dimension = doc.at("dimension").get<std::size_t>();
  real.gram = matrix_from<T>(doc.at("gram"));
  real.roots = matrix_from<T>(doc.at("roots"));
  real.coefficients = matrix_from<T>(doc.at("coefficients"));
  for (const auto& m : doc.at("reflections")) real.reflections.push_back(matrix_from<T>(m));
  return real;
}

}  // namespace

GroupElement parse_element(const RootSystem& rs, const std::string& text) {
  std::size_t start = text.find_first_not_of(" \t");
  if (start != std::string::npos && text[start] == '[') {
    const auto end = text.find_last_not_of(" \t");
    const auto word = parse_word(rs, text.substr(start, end - start + 1));
    return element_from_word(rs, word);
  }
  if (!is_abd(rs)) throw ParseError("cycle notation needs an A, B or D system; use a word [i j k] for " + rs.name());
  return to_root_perm(parse_signed_permutation(text, degree(rs)), rs);
}

std::string format_element(const RootSystem& rs, const GroupElement& w) {
  if (is_abd(rs)) return format(from_root_perm(w, rs));
  std::string out = "[";
  bool first = true;
  for (std::size_t r : reduced_word(rs, w)) {
    if (!first) out += " ";
    out += std::to_string(r + 1);
    first = false;
  }
  return out + "]";
}

bool has_structured_path(const RootSystem& rs) { return is_abd(rs); }

InvolutionSet compute_inverting_involutions(const RootSystem& rs, const GroupElement& w, std::uint64_t guard) {
  if (has_structured_path(rs)) return inverting_involutions_structured(from_root_perm(w, rs), rs).set;
  const auto group = enumerate_group(rs, guard);
  std::vector<GroupElement> involutions;
  for (const auto& x : group.elements)
    if (is_involution(x)) involutions.push_back(x);
  return inverting_involutions(rs, w, involutions);
}

ExcessReport compute_excess_report(const RootSystem& rs, const GroupElement& w,
                                   const std::vector<ParabolicContext>& parabolics, std::uint64_t guard) {
  for (const auto& ctx : parabolics)
    if (!ctx.contains(rs, w)) throw std::invalid_argument("element is not in W_J for J = " + ctx.label());

  const InvolutionSet iw = compute_inverting_involutions(rs, w, guard);
  const InvolutionSet jw = j_set(rs, w, iw);
  const ExcessResult e = excess(rs, w, iw, true);

  ExcessReport report;
  report.descriptor = rs.name();
  report.element = format_element(rs, w);
  report.length = length(rs, w);
  report.reflection_length = reflection_length(rs, w);
  report.excess = e.value;
  report.reflection_excess = reflection_excess(rs, w, jw).value;
  for (const auto& ctx : parabolics)
    report.parabolic.push_back({ctx.label(), parabolic_excess(rs, w, iw, ctx).value,
                                parabolic_reflection_excess(rs, w, jw, ctx).value});
  for (const auto& p : e.witnesses)
    report.witnesses.push_back({format_element(rs, p.x), format_element(rs, p.y), p.defect});
  return report;
}

nlohmann::json to_json(const ExcessReport& r) {
  nlohmann::json doc;
  doc["descriptor"] = r.descriptor;
  doc["element"] = r.element;
  doc["length"] = r.length;
  doc["reflection_length"] = r.reflection_length;
  doc["excess"] = r.excess;
  doc["reflection_excess"] = r.reflection_excess;
  doc["parabolic"] = nlohmann::json::array();
  for (const auto& p : r.parabolic) doc["parabolic"].push_back({{"J", p.J}, {"e_J", p.e_J}, {"E_J", p.E_J}});
  doc["witnesses"] = nlohmann::json::array();
  for (const auto& w : r.witnesses) doc["witnesses"].push_back({{"x", w.x}, {"y", w.y}, {"defect", w.defect}});
  return doc;
}

std::string csv_header() { return "descriptor,element,length,reflection_length,excess,reflection_excess,J,e_J,E_J"; }

std::vector<std::string> csv_rows(const ExcessReport& r) {
  const std::string prefix = csv_field(r.descriptor) + "," + csv_field(r.element) + "," + std::to_string(r.length) +
                             "," + std::to_string(r.reflection_length) + "," + std::to_string(r.excess) + "," +
                             std::to_string(r.reflection_excess) + ",";
  std::vector<std::string> rows;
  for (const auto& p : r.parabolic)
    rows.push_back(prefix + csv_field(p.J) + "," + std::to_string(p.e_J) + "," + std::to_string(p.E_J));
  if (rows.empty()) rows.push_back(prefix + ",,");
  return rows;
}

nlohmann::json root_system_to_json(const RootSystem& rs) {
  nlohmann::json doc;
  doc["schema"] = kRootSystemSchema;
  doc["descriptor"] = rs.name();
  doc["field"] = rs.exact() ? "exact" : "real";
  std::visit([&](const auto& real) { realization_json(real, doc); }, rs.realization());
  doc["simple_indices"] = rs.simple_indices();
  auto tables = nlohmann::json::array();
  for (const auto& g : rs.generators()) {
    auto t = nlohmann::json::array();
    for (const auto& img : g.images()) t.push_back(img.to_int());
    tables.push_back(std::move(t));
  }
  doc["tables"] = std::move(tables);
  return doc;
}

RootSystem root_system_from_json(const nlohmann::json& doc) {
  if (doc.at("schema").get<int>() != kRootSystemSchema)
    throw std::invalid_argument("unsupported root system schema " + doc.at("schema").dump());
  const CoxeterProduct product = parse_product(doc.at("descriptor").get<std::string>());
  auto simple = doc.at("simple_indices").get<std::vector<std::size_t>>();
  std::vector<std::vector<SignedRoot>> tables;
  for (const auto& t : doc.at("tables")) {
    std::vector<SignedRoot> row;
    for (const auto& v : t) row.push_back(SignedRoot::from_int(v.get<int>()));
    tables.push_back(std::move(row));
  }
  const std::string field = doc.at("field").get<std::string>();
  if (field == "exact")
    return assemble(product, realization_from<Rational>(doc), std::move(simple), std::move(tables));
  if (field == "real") return assemble(product, realization_from<double>(doc), std::move(simple), std::move(tables));
  throw std::invalid_argument("unknown field '" + field + "'");
}

}  // namespace coxex
