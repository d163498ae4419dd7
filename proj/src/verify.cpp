#include "coxex/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include "coxex/parallel.hpp"
#include "coxex/report.hpp"
#include "coxex/root_core.hpp"
#include "coxex/signed_perm.hpp"
#include "coxex/structure.hpp"

namespace coxex {

namespace {

constexpr std::size_t kGapExamples = 20;

bool abd(const RootSystem& rs) {
  if (!rs.is_irreducible()) return false;
  const Family f = rs.descriptor().family;
  return f == Family::A || f == Family::B || f == Family::D;
}

bool is_family(const GroupData& g, Family f) {
  return g.root_system().is_irreducible() && g.root_system().descriptor().family == f;
}

bool has_d_factor(const GroupData& g) {
  const auto& c = g.root_system().components();
  return std::any_of(c.begin(), c.end(), [](const CoxeterDescriptor& d) { return d.family == Family::D; });
}

std::string num(std::size_t v) { return std::to_string(v); }

std::vector<std::vector<std::size_t>> compute_classes(const RootSystem& rs, const GroupEnumeration& group) {
  std::vector<std::size_t> owner(group.size(), group.size());
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t start = 0; start < group.size(); ++start) {
    if (owner[start] != group.size()) continue;
    const std::size_t id = classes.size();
    std::vector<std::size_t> members{start};
    owner[start] = id;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (const auto& g : rs.generators()) {
        const std::size_t j = group.index_of(conjugate(group.elements[members[k]], g));
        if (owner[j] == group.size()) {
          owner[j] = id;
          members.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  return classes;
}

}  // namespace

GroupData::GroupData(const CoxeterProduct& product, const SuiteConfig& config) : rs_(build_root_system(product)) {
  const std::uint64_t order = group_order(product);
  if (order == 0 || order > config.guard)
    throw GuardExceeded("|W(" + rs_.name() + ")| exceeds the sweep guard of " + std::to_string(config.guard));
  group_ = enumerate_group(rs_, config.guard);

  switch (config.parabolics) {
    case ParabolicSelection::all: parabolics_ = all_parabolic_contexts(rs_); break;
    case ParabolicSelection::maximal: parabolics_ = maximal_parabolic_contexts(rs_); break;
    case ParabolicSelection::explicit_set: {
      for (std::size_t r : config.explicit_J)
        if (r >= rs_.rank()) throw std::invalid_argument("generator " + std::to_string(r + 1) + " out of range");
      parabolics_.push_back(parabolic_context(rs_, config.explicit_J));
      break;
    }
  }
  splits_.assign(parabolics_.size(), std::nullopt);
  if (abd(rs_)) {
    for (std::size_t m : split_points(rs_)) {
      const auto mask = split_context(rs_, m).mask();
      for (std::size_t p = 0; p < parabolics_.size(); ++p)
        if (parabolics_[p].mask() == mask) splits_[p] = m;
    }
  }

  std::vector<GroupElement> involutions;
  for (const auto& x : group_.elements)
    if (is_involution(x)) involutions.push_back(x);

  records_.resize(group_.size());
  parallel_for(group_.size(), config.workers, [&](std::size_t i) {
    ElementRecord& rec = records_[i];
    rec.w = group_.elements[i];
    rec.length = length(rs_, rec.w);
    rec.reflection_length = reflection_length(rs_, rec.w);
    rec.iw = inverting_involutions(rs_, rec.w, involutions);
    rec.jw = j_set(rs_, rec.w, rec.iw);
    auto e = excess(rs_, rec.w, rec.iw, true);
    rec.e = e.value;
    rec.spartan = std::move(e.witnesses);
    rec.E = reflection_excess(rs_, rec.w, rec.jw).value;
    for (std::size_t p = 0; p < parabolics_.size(); ++p) {
      if (!parabolics_[p].contains(rs_, rec.w)) continue;
      rec.restricted.push_back({p, parabolic_excess(rs_, rec.w, rec.iw, parabolics_[p]).value,
                                parabolic_reflection_excess(rs_, rec.w, rec.jw, parabolics_[p]).value});
    }
  });

  for (const auto& w : group_.elements)
    if (!w.is_identity() && is_central(rs_, w)) nontrivial_centre_ = true;
}

const std::vector<std::vector<std::size_t>>& GroupData::conjugacy_classes() const {
  if (classes_.empty()) classes_ = compute_classes(rs_, group_);
  return classes_;
}

std::string GroupData::label(std::size_t w) const { return format_element(rs_, group_.elements[w]); }

const ElementRecord::Restricted* Item::restricted() const {
  if (!parabolic) return nullptr;
  for (const auto& r : record().restricted)
    if (r.parabolic == *parabolic) return &r;
  return nullptr;
}

namespace {

Verdict always(const Item&) { return Verdict::check; }
bool any_group(const GroupData&) { return true; }

std::pair<std::string, std::string> no_detail(const Item&) { return {"false", "true"}; }

std::vector<Theorem> build_registry() {
  std::vector<Theorem> t;

  t.push_back({"parabolic-reflection-excess", "E_J(w) = E(w) for every standard parabolic J and w in W_J",
               Domain::element_parabolic, any_group, always,
               [](const Item& it) { return it.restricted()->E_J == it.record().E; },
               [](const Item& it) {
                 return std::pair{"E_J=" + num(it.restricted()->E_J), "E=" + num(it.record().E)};
               },
               true});

  t.push_back({"parabolic-excess",
               "e_J(w) = e(w) for every standard parabolic J and w in W_J when W has no D_n factor; "
               "for D_n only the split hypotheses on Sym(1..m) x D(m+1..n) are asserted, other J are observed",
               Domain::element_parabolic, any_group,
               [](const Item& it) {
                 if (!has_d_factor(*it.group)) return Verdict::check;
                 const auto m = it.group->split_of(*it.parabolic);
                 if (is_family(*it.group, Family::D) && m &&
                     dn_condition_check(it.rs(), it.record().w, *m) != DnCondition::none)
                   return Verdict::check;
                 return Verdict::observe;
               },
               [](const Item& it) { return it.restricted()->e_J == it.record().e; },
               [](const Item& it) {
                 return std::pair{"e_J=" + num(it.restricted()->e_J), "e=" + num(it.record().e)};
               },
               true});

  t.push_back({"dn-split-excess",
               "D_n, J = Sym(1..m) x D(m+1..n): e_J(w) = e(w) if m = n, or w2 has a 1-cycle, or w2 has only "
               "even positive cycles",
               Domain::element_parabolic, [](const GroupData& g) { return is_family(g, Family::D); },
               [](const Item& it) {
                 const auto m = it.group->split_of(*it.parabolic);
                 if (!m) return Verdict::skip;
                 return dn_condition_check(it.rs(), it.record().w, *m) != DnCondition::none ? Verdict::check
                                                                                           : Verdict::skip;
               },
               [](const Item& it) { return it.restricted()->e_J == it.record().e; },
               [](const Item& it) {
                 return std::pair{"e_J=" + num(it.restricted()->e_J), "e=" + num(it.record().e)};
               },
               true});

  t.push_back({"parabolic-excess-bound", "e(w) <= e_J(w) and E(w) <= E_J(w) for w in W_J", Domain::element_parabolic,
               any_group, always,
               [](const Item& it) {
                 return it.record().e <= it.restricted()->e_J && it.record().E <= it.restricted()->E_J;
               },
               [](const Item& it) {
                 return std::pair{"e_J=" + num(it.restricted()->e_J) + " E_J=" + num(it.restricted()->E_J),
                                  ">= e=" + num(it.record().e) + " E=" + num(it.record().E)};
               },
               true});

  t.push_back({"embedded-length", "for w in W_J, |N(w) & Phi_J| = l(w)", Domain::element_parabolic, any_group,
               always,
               [](const Item& it) {
                 const auto& ctx = it.group->parabolics()[*it.parabolic];
                 return ctx.embedded_length(it.rs(), it.record().w) == it.record().length;
               },
               no_detail, true});

  t.push_back({"nw-subset-niw", "N(w) is contained in N(I_w)", Domain::elements, any_group, always,
               [](const Item& it) {
                 const auto& r = it.record();
                 return inversion_set(it.rs(), r.w).is_subset_of(n_of_inverting_set(it.rs(), r.w, r.iw));
               },
               [](const Item& it) {
                 const auto& r = it.record();
                 return std::pair{"|N(w) - N(I_w)|=" + num((inversion_set(it.rs(), r.w) -
                                                             n_of_inverting_set(it.rs(), r.w, r.iw))
                                                                .count()),
                                  "0"};
               },
               false});

  t.push_back({"cuspidal-niw-full", "w cuspidal implies N(I_w) = Phi+", Domain::elements,
               [](const GroupData& g) { return g.root_system().is_irreducible(); },
               [](const Item& it) { return is_cuspidal(it.rs(), it.record().w) ? Verdict::check : Verdict::skip; },
               [](const Item& it) { return n_of_inverting_set(it.rs(), it.record().w, it.record().iw).full(); },
               [](const Item& it) {
                 return std::pair{"|N(I_w)|=" + num(n_of_inverting_set(it.rs(), it.record().w, it.record().iw).count()),
                                  "|Phi+|=" + num(it.rs().num_positive_roots())};
               },
               false});

  t.push_back({"centre-niw-full", "W with non-trivial centre: N(I_w) = Phi+ for all w", Domain::elements,
               [](const GroupData& g) { return g.has_nontrivial_centre(); }, always,
               [](const Item& it) { return n_of_inverting_set(it.rs(), it.record().w, it.record().iw).full(); },
               [](const Item& it) {
                 return std::pair{"|N(I_w)|=" + num(n_of_inverting_set(it.rs(), it.record().w, it.record().iw).count()),
                                  "|Phi+|=" + num(it.rs().num_positive_roots())};
               },
               false});

  t.push_back({"spartan-support",
               "A/B: supp+(x), supp+(y) inside supp+(w); D: supp+(y) - supp+(w) = supp+(x) - supp+(w) has at most one "
               "point, negated by x and y",
               Domain::spartan_pairs, [](const GroupData& g) { return abd(g.root_system()); }, always,
               [](const Item& it) { return spartan_support_check(it.rs(), *it.pair, it.record().w); },
               [](const Item& it) {
                 return std::pair{"x=" + format_element(it.rs(), it.pair->x) + " y=" + format_element(it.rs(), it.pair->y),
                                  "support containment"};
               },
               false});

  t.push_back({"spartan-overlap",
               "w in Sym(1..m) x W(m+1..n): every 2-cycle of a spartan x or y stays on one side of m",
               Domain::split_spartan_pairs, [](const GroupData& g) { return abd(g.root_system()); }, always,
               [](const Item& it) { return overlap_check(it.rs(), *it.pair, *it.group->split_of(*it.parabolic)); },
               [](const Item& it) {
                 return std::pair{"x=" + format_element(it.rs(), it.pair->x) + " y=" + format_element(it.rs(), it.pair->y),
                                  "no 2-cycle across m=" + num(*it.group->split_of(*it.parabolic))};
               },
               true});

  t.push_back({"spartan-swapcycle",
               "if y carries a positive w-cycle A onto the inverse of a w-cycle B then max(A) > min(B)",
               Domain::spartan_pairs, [](const GroupData& g) { return abd(g.root_system()); }, always,
               [](const Item& it) { return swapcycle_check(it.rs(), *it.pair, it.record().w); },
               [](const Item& it) {
                 return std::pair{"y=" + format_element(it.rs(), it.pair->y), "max(A) > min(B)"};
               },
               false});

  t.push_back({"spartan-defect", "spartan (x, y): x^2 = y^2 = 1, xy = w, l(x) + l(y) - l(w) = 2|N(x) & N(y)| = e(w)",
               Domain::spartan_pairs, any_group, always,
               [](const Item& it) {
                 const auto& p = *it.pair;
                 const auto& r = it.record();
                 const auto common = (inversion_set(it.rs(), p.x) & inversion_set(it.rs(), p.y)).count();
                 return is_involution(p.x) && is_involution(p.y) && compose(p.x, p.y) == r.w && p.defect == r.e &&
                        2 * common == r.e;
               },
               [](const Item& it) {
                 const auto common = (inversion_set(it.rs(), it.pair->x) & inversion_set(it.rs(), it.pair->y)).count();
                 return std::pair{"defect=" + num(it.pair->defect) + " 2|N(x)&N(y)|=" + num(2 * common),
                                  "e=" + num(it.record().e)};
               },
               false});

  t.push_back({"excess-parity", "e(w) is even, e(w) = e(w^-1) and E(w) >= e(w)", Domain::elements, any_group, always,
               [](const Item& it) {
                 const auto& r = it.record();
                 const auto& inv = it.group->records()[it.group->enumeration().index_of(invert(r.w))];
                 return r.e % 2 == 0 && r.e == inv.e && r.E >= r.e;
               },
               [](const Item& it) {
                 const auto& r = it.record();
                 const auto& inv = it.group->records()[it.group->enumeration().index_of(invert(r.w))];
                 return std::pair{"e=" + num(r.e) + " e(w^-1)=" + num(inv.e) + " E=" + num(r.E),
                                  "even, equal, E >= e"};
               },
               false});

  t.push_back({"jw-equivalence", "x in I_w fixes V_1(w) iff L(w) = L(x) + L(xw)", Domain::elements, any_group, always,
               [](const Item& it) {
                 const auto& r = it.record();
                 std::vector<GroupElement> additive;
                 for (const auto& x : r.iw.elements)
                   if (reflection_length(it.rs(), x) + reflection_length(it.rs(), compose(x, r.w)) ==
                       r.reflection_length)
                     additive.push_back(x);
                 return additive == r.jw.elements;
               },
               no_detail, false});

  t.push_back({"structured-iw", "the involutions of the coset C(w) x0 in W(B_n) lying in W equal I_w",
               Domain::elements, [](const GroupData& g) { return abd(g.root_system()); }, always,
               [](const Item& it) {
                 const auto& r = it.record();
                 return inverting_involutions_structured(from_root_perm(r.w, it.rs()), it.rs()).set.elements ==
                        r.iw.elements;
               },
               [](const Item& it) {
                 const auto& r = it.record();
                 const auto s = inverting_involutions_structured(from_root_perm(r.w, it.rs()), it.rs());
                 return std::pair{"|structured|=" + num(s.set.size()), "|I_w|=" + num(r.iw.size())};
               },
               false});

  t.push_back({"length-word", "l(w) = |N(w)| equals the length of a breadth-first reduced word", Domain::elements,
               any_group, always,
               [](const Item& it) {
                 return it.record().length == it.group->enumeration().words[it.w].size() &&
                        reduced_word(it.rs(), it.record().w).size() == it.record().length;
               },
               no_detail, false});

  t.push_back({"conjugate-excess-zero", "every conjugacy class contains an element of excess 0",
               Domain::conjugacy_classes, any_group, always,
               [](const Item& it) {
                 const auto& members = it.group->conjugacy_classes()[it.klass];
                 return std::any_of(members.begin(), members.end(),
                                    [&](std::size_t k) { return it.group->records()[k].e == 0; });
               },
               [](const Item& it) {
                 std::size_t best = SIZE_MAX;
                 for (std::size_t k : it.group->conjugacy_classes()[it.klass])
                   best = std::min(best, it.group->records()[k].e);
                 return std::pair{"min e=" + num(best), "0"};
               },
               false});

  return t;
}

std::map<std::size_t, std::vector<std::size_t>> members_by_parabolic(const GroupData& g) {
  std::map<std::size_t, std::vector<std::size_t>> out;
  for (std::size_t w = 0; w < g.records().size(); ++w)
    for (const auto& r : g.records()[w].restricted) out[r.parabolic].push_back(w);
  return out;
}

std::vector<Item> items_for(const Theorem& th, const GroupData& g) {
  std::vector<Item> items;
  const auto& records = g.records();
  switch (th.domain) {
    case Domain::elements:
      for (std::size_t w = 0; w < records.size(); ++w) items.push_back({&g, w, std::nullopt, nullptr, 0});
      break;
    case Domain::element_parabolic:
      for (const auto& [p, members] : members_by_parabolic(g))
        for (std::size_t w : members) items.push_back({&g, w, p, nullptr, 0});
      break;
    case Domain::spartan_pairs:
      for (std::size_t w = 0; w < records.size(); ++w)
        for (const auto& pair : records[w].spartan) items.push_back({&g, w, std::nullopt, &pair, 0});
      break;
    case Domain::split_spartan_pairs:
      for (const auto& [p, members] : members_by_parabolic(g)) {
        if (!g.split_of(p)) continue;
        for (std::size_t w : members)
          for (const auto& pair : records[w].spartan) items.push_back({&g, w, p, &pair, 0});
      }
      break;
    case Domain::conjugacy_classes:
      for (std::size_t k = 0; k < g.conjugacy_classes().size(); ++k)
        items.push_back({&g, g.conjugacy_classes()[k].front(), std::nullopt, nullptr, k});
      break;
  }
  return items;
}

std::string parabolic_label(const Item& it) {
  if (!it.parabolic) return "";
  return it.group->parabolics()[*it.parabolic].label();
}

}  // namespace

const std::vector<Theorem>& theorem_registry() {
  static const std::vector<Theorem> registry = build_registry();
  return registry;
}

const Theorem& find_theorem(const std::string& name) {
  for (const auto& t : theorem_registry())
    if (t.name == name) return t;
  throw std::invalid_argument("unknown theorem '" + name + "'");
}

std::vector<const Theorem*> select_theorems(const std::vector<std::string>& names) {
  std::vector<const Theorem*> out;
  const bool all = names.empty() || std::find(names.begin(), names.end(), "all") != names.end();
  if (all) {
    for (const auto& t : theorem_registry()) out.push_back(&t);
    return out;
  }
  for (const auto& n : names) out.push_back(&find_theorem(n));
  return out;
}

std::size_t SuiteResult::failures() const {
  std::size_t n = 0;
  for (const auto& t : tallies) n += t.failures;
  return n;
}

void run_theorems(const GroupData& group, const std::vector<const Theorem*>& theorems, unsigned workers,
                  SuiteResult& result) {
  const std::string descriptor = group.root_system().name();
  for (const Theorem* th : theorems) {
    TheoremTally tally{th->name, descriptor, th->applies(group)};
    if (!tally.applicable) {
      result.tallies.push_back(tally);
      continue;
    }
    const auto items = items_for(*th, group);
    // 0 skip, 1 holds, 2 fails, 3 observed holds, 4 observed fails
    std::vector<unsigned char> outcome(items.size(), 0);
    parallel_for(items.size(), workers, [&](std::size_t i) {
      const Verdict v = th->hypothesis(items[i]);
      if (v == Verdict::skip) return;
      const bool ok = th->conclusion(items[i]);
      outcome[i] = static_cast<unsigned char>((v == Verdict::check ? 1 : 3) + (ok ? 0 : 1));
    });
    std::size_t gap_examples = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto o = outcome[i];
      if (o == 0) continue;
      if (o <= 2) ++tally.checked;
      else ++tally.observed;
      if (o != 2 && o != 4) continue;
      if (o == 4 && gap_examples >= kGapExamples) {
        ++tally.gaps;
        continue;
      }
      const auto [observed, expected] = th->describe(items[i]);
      Counterexample c{th->name, descriptor, group.label(items[i].w), parabolic_label(items[i]), observed, expected};
      if (o == 2) {
        ++tally.failures;
        result.counterexamples.push_back(std::move(c));
      } else {
        ++tally.gaps;
        ++gap_examples;
        result.gaps.push_back(std::move(c));
      }
    }
    result.tallies.push_back(tally);
  }
}

SuiteResult run_suite(const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const auto theorems = select_theorems(config.theorems);
  SuiteResult result;
  for (const auto& product : config.groups) {
    const GroupData group(product, config);
    run_theorems(group, theorems, config.workers, result);
  }
  result.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

nlohmann::json to_json(const SuiteResult& result) {
  auto cex = [](const Counterexample& c) {
    return nlohmann::json{{"theorem", c.theorem},   {"descriptor", c.descriptor}, {"element", c.element},
                          {"J", c.parabolic},       {"observed", c.observed},     {"expected", c.expected}};
  };
  nlohmann::json doc;
  doc["failures"] = result.failures();
  doc["theorems"] = nlohmann::json::array();
  for (const auto& t : result.tallies)
    doc["theorems"].push_back({{"theorem", t.theorem},
                               {"descriptor", t.descriptor},
                               {"applicable", t.applicable},
                               {"checked", t.checked},
                               {"failures", t.failures},
                               {"observed", t.observed},
                               {"gaps", t.gaps}});
  doc["counterexamples"] = nlohmann::json::array();
  for (const auto& c : result.counterexamples) doc["counterexamples"].push_back(cex(c));
  doc["gaps"] = nlohmann::json::array();
  for (const auto& c : result.gaps) doc["gaps"].push_back(cex(c));
  return doc;
}

std::string to_csv(const SuiteResult& result) {
  std::ostringstream out;
  out << "theorem,descriptor,applicable,checked,failures,observed,gaps\n";
  for (const auto& t : result.tallies)
    out << t.theorem << ',' << t.descriptor << ',' << (t.applicable ? "true" : "false") << ',' << t.checked << ','
        << t.failures << ',' << t.observed << ',' << t.gaps << '\n';
  return out.str();
}

}  // namespace coxex
