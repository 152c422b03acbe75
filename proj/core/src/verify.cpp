#include "rookrep/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "rookrep/branching.hpp"
#include "rookrep/grothendieck.hpp"
#include "rookrep/jucysmurphy.hpp"
#include "rookrep/monoid.hpp"
#include "rookrep/seminormal.hpp"

namespace rookrep {

void SuiteReport::expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok) failures.push_back(what);
}

void SuiteReport::merge(const SuiteReport& o) {
  checks += o.checks;
  failures.insert(failures.end(), o.failures.begin(), o.failures.end());
}

namespace {

using Case = std::pair<int, int>;

std::vector<Case> cases(const SuiteParams& params, int n_max, int r_max) {
  std::vector<Case> out;
  for (int n = 1; n <= n_max; ++n) {
    for (int r = 1; r <= r_max; ++r) {
      if ((!params.n || *params.n == n) && (!params.r || *params.r == r)) out.emplace_back(n, r);
    }
  }
  if (out.empty() && params.n && params.r) out.emplace_back(*params.n, *params.r);
  return out;
}

std::string tag(int n, int r) { return "(n=" + std::to_string(n) + ",r=" + std::to_string(r) + ")"; }

std::string label_string(const Multipartition& m) {
  std::string s = "(";
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (c) s += "|";
    for (std::size_t k = 0; k < m[c].size(); ++k) s += (k ? "," : "") + std::to_string(m[c][k]);
  }
  return s + ")";
}

// Counts matrices over {0} and C_r with at most one nonzero per row and column by
// running through every matrix with entries in {0, 1, ..., r}.
long brute_force_count(int n, int r) {
  const int cells = n * n;
  long total = 0;
  std::vector<int> entry(static_cast<std::size_t>(cells), 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      int row_nz = 0;
      int col_nz = 0;
      for (int j = 0; j < n; ++j) {
        row_nz += entry[static_cast<std::size_t>(i * n + j)] != 0;
        col_nz += entry[static_cast<std::size_t>(j * n + i)] != 0;
      }
      ok = row_nz <= 1 && col_nz <= 1;
    }
    total += ok;
    int k = 0;
    while (k < cells && entry[static_cast<std::size_t>(k)] == r) entry[static_cast<std::size_t>(k++)] = 0;
    if (k == cells) break;
    ++entry[static_cast<std::size_t>(k)];
  }
  return total;
}

}  // namespace

SuiteReport suite_monoid(const SuiteParams& params) {
  SuiteReport rep{"monoid", 0, {}};
  for (const auto& [n, r] : cases(params, 3, 3)) {
    const auto elements = enumerate_elements(n, r);
    const long formula = monoid_order(n, r);
    rep.expect(static_cast<long>(elements.size()) == formula, "enumeration size vs formula " + tag(n, r));
    rep.expect(brute_force_count(n, r) == formula, "matrix brute force vs formula " + tag(n, r));
    const std::set<RookElem> unique(elements.begin(), elements.end());
    rep.expect(unique.size() == elements.size(), "distinct elements " + tag(n, r));
  }
  if (!params.n && !params.r) {
    rep.expect(monoid_order(2, 1) == 7, "|R_2| = 7");
    rep.expect(monoid_order(3, 1) == 34, "|R_3| = 34");
    rep.expect(monoid_order(2, 2) == 17, "|C_2 wr R_2| = 17");
  }
  return rep;
}

SuiteReport suite_dimension(const SuiteParams& params) {
  SuiteReport rep{"dimension", 0, {}};
  for (const auto& [n, r] : cases(params, 3, 3)) {
    long total = 0;
    for (const auto& [level, lambda] : multipartitions_up_to(r, n)) {
      const long d = static_cast<long>(enumerate_tableaux(lambda, n).size());
      total += d * d;
    }
    rep.expect(total == monoid_order(n, r), "sum of squared dimensions " + tag(n, r));
  }
  return rep;
}

SuiteReport suite_representations(const SuiteParams& params) {
  SuiteReport rep{"representations", 0, {}};
  std::vector<Case> list{{2, 1}, {2, 2}, {2, 3}, {3, 1}};
  if (params.n || params.r) {
    list.erase(std::remove_if(list.begin(), list.end(),
                              [&](const Case& c) {
                                return (params.n && *params.n != c.first) || (params.r && *params.r != c.second);
                              }),
               list.end());
    if (list.empty() && params.n && params.r) list.emplace_back(*params.n, *params.r);
  }
  for (const auto& [n, r] : list) {
    const auto elements = enumerate_elements(n, r);
    const Generators g = generators(n, r);
    for (const auto& [level, lambda] : multipartitions_up_to(r, n)) {
      const std::string where = label_string(lambda) + " " + tag(n, r);
      const InducedOracle oracle(lambda, n);
      std::map<RookElem, CycMatrix> M;
      for (const auto& e : elements) M.emplace(e, oracle.matrix(e));
      bool mult = true;
      for (const auto& a : elements) {
        for (const auto& b : elements) {
          if (!(M.at(a) * M.at(b) == M.at(a * b))) mult = false;
        }
      }
      rep.expect(mult, "oracle multiplicativity " + where);
      const Representation irr = rook_irrep(lambda, n);
      rep.expect(*irr.mats.P == M.at(g.P), "closed-form P equals oracle " + where);
      rep.expect(*irr.mats.Q == M.at(g.Q), "closed-form Q equals oracle " + where);
      for (std::size_t j = 0; j < g.s.size(); ++j) {
        rep.expect(irr.mats.s[j] == M.at(g.s[j]), "closed-form s" + std::to_string(j + 1) + " equals oracle " + where);
      }
      bool words = true;
      for (const auto& e : elements) {
        if (!(act_element(irr.mats, e) == M.at(e))) words = false;
      }
      rep.expect(words, "closed-form words reproduce oracle on every element " + where);
    }
  }
  return rep;
}

SuiteReport suite_jm(const SuiteParams& params) {
  SuiteReport rep{"jm", 0, {}};
  for (const auto& [n, r] : cases(params, 3, 3)) {
    const JmFamily jm = jm_elements(n, r);
    bool commute = true;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto& Xi = jm.X[static_cast<std::size_t>(i)];
        const auto& Xj = jm.X[static_cast<std::size_t>(j)];
        const auto& Yi = jm.Y[static_cast<std::size_t>(i)];
        const auto& Yj = jm.Y[static_cast<std::size_t>(j)];
        if (i < j && (!commutator(Xi, Xj).is_zero() || !commutator(Yi, Yj).is_zero())) commute = false;
        if (!commutator(Xi, Yj).is_zero()) commute = false;
      }
    }
    rep.expect(commute, "Jucys-Murphy elements commute " + tag(n, r));
    for (int j = 2; j <= n; ++j) {
      rep.expect(jm_Y_recursive(jm, j) == jm.Y[static_cast<std::size_t>(j - 1)],
                 "recursive form of Y" + std::to_string(j) + " " + tag(n, r));
    }
    std::set<std::string> keys;
    std::size_t vectors = 0;
    for (const auto& [level, lambda] : multipartitions_up_to(r, n)) {
      const JmSpectrum spec = jm_spectrum(rook_irrep(lambda, n), jm);
      for (const auto& v : spec.violations) rep.failures.push_back(v + " " + label_string(lambda) + " " + tag(n, r));
      ++rep.checks;
      for (const auto& row : spec.rows) {
        keys.insert(eigenvalue_key(row.x, row.y));
        ++vectors;
      }
    }
    rep.expect(keys.size() == vectors, "eigenvalue strings separate all basis vectors " + tag(n, r));
  }
  return rep;
}

SuiteReport suite_bratteli(const SuiteParams& params) {
  SuiteReport rep{"bratteli", 0, {}};
  const int r = params.r.value_or(2);
  const int n_max = params.n.value_or(2);
  const BratteliGraph g = bratteli_graph(r, n_max);
  for (int m = 0; m <= n_max; ++m) {
    for (const auto& lambda : g.levels[static_cast<std::size_t>(m)]) {
      rep.expect(count_paths(g, lambda, m) == static_cast<long>(enumerate_tableaux(lambda, m).size()),
                 "path count equals tableau count for " + label_string(lambda) + " at level " + std::to_string(m));
    }
  }
  rep.expect(parse_graph_json(export_graph(g, "json")) == g, "JSON round trip");
  rep.expect(parse_graph_dot(export_graph(g, "dot")) == g, "DOT round trip");
  if (r == 2 && n_max == 2) {
    rep.expect(g.levels[0].size() == 1 && g.levels[1].size() == 3 && g.levels[2].size() == 8,
               "vertex counts 1, 3, 8");
    const Partition e{};
    const Partition one{1};
    const Multipartition E{e, e};
    const Multipartition A{one, e};
    const Multipartition B{e, one};
    const std::vector<std::tuple<int, Multipartition, Multipartition>> golden{
        {1, E, E}, {1, E, A}, {1, E, B},
        {2, E, E}, {2, E, A}, {2, A, A}, {2, E, B}, {2, B, B},
        {2, A, {{2}, e}}, {2, A, {{1, 1}, e}}, {2, B, {e, {2}}}, {2, B, {e, {1, 1}}},
        {2, A, {one, one}}, {2, B, {one, one}}};
    std::set<std::array<int, 3>> expected;
    for (const auto& [m, from, to] : golden) {
      expected.insert({m, g.vertex_index(m - 1, from), g.vertex_index(m, to)});
    }
    const std::set<std::array<int, 3>> actual(g.edges.begin(), g.edges.end());
    rep.expect(g.edges.size() == 14 && actual == expected, "edge set matches the level-2 diagram");
  }
  return rep;
}

SuiteReport suite_branching(const SuiteParams& params) {
  SuiteReport rep{"branching", 0, {}};
  for (const auto& [n, r] : cases(params, 3, 2)) {
    for (const auto& [level, lambda] : multipartitions_up_to(r, n)) {
      std::map<Multipartition, int> expected;
      for (const auto& mu : restrict_label(lambda, n)) ++expected[mu];
      std::map<Multipartition, int> actual;
      try {
        actual = decompose_by_spectrum(restrict_module(rook_irrep(lambda, n).mats));
      } catch (const SpectrumInconsistency& e) {
        rep.failures.push_back(std::string(e.what()) + " " + label_string(lambda) + " " + tag(n, r));
      }
      rep.expect(actual == expected, "restriction of " + label_string(lambda) + " " + tag(n, r));
    }
  }
  return rep;
}

SuiteReport suite_gelfand(const SuiteParams& params) {
  SuiteReport rep{"gelfand", 0, {}};
  for (const auto& [n, r] : cases(params, 3, 2)) {
    const GelfandModel g = gelfand_model(n, r);
    std::size_t dims = 0;
    std::map<Multipartition, int> expected;
    for (const auto& [level, lambda] : multipartitions_up_to(r, n)) {
      dims += enumerate_tableaux(lambda, n).size();
      expected[lambda] = 1;
    }
    rep.expect(g.basis.size() == dims, "dimension equals sum of irreducible dimensions " + tag(n, r));
    std::map<Multipartition, int> actual;
    try {
      actual = decompose_by_spectrum(g.mats);
    } catch (const SpectrumInconsistency& e) {
      rep.failures.push_back(std::string(e.what()) + " " + tag(n, r));
    }
    std::string detail;
    for (const auto& [lambda, mult] : actual) {
      if (mult != 1) detail += " " + label_string(lambda) + "x" + std::to_string(mult);
    }
    for (const auto& [lambda, one] : expected) {
      if (!actual.count(lambda)) detail += " missing " + label_string(lambda);
    }
    rep.expect(actual == expected, "multiplicity-free with full support " + tag(n, r) + detail);
  }
  return rep;
}

SuiteReport suite_centrality(const SuiteParams& params) {
  SuiteReport rep{"centrality", 0, {}};
  for (const auto& [n, r] : cases(params, 3, 2)) {
    for (int k = 1; k <= n; ++k) {
      const CentralityReport c = central_symmetric_polys(n, r, k);
      rep.expect(c.central(), "e" + std::to_string(k) + " of X and Y central " + tag(n, r));
      for (const auto& f : c.failures) rep.failures.push_back("  " + f + " " + tag(n, r));
    }
  }
  return rep;
}

SuiteReport suite_chevalley(const SuiteParams& params) {
  SuiteReport rep{"chevalley", 0, {}};
  const int degree = params.degree.value_or(6);
  std::vector<int> primes{2, 3};
  if (params.p) primes = {*params.p};
  for (int p : primes) {
    const RelationReport rel = lie_relation_check(p, degree);
    rep.checks += rel.checks;
    for (const auto& v : rel.violations) rep.failures.push_back("p=" + std::to_string(p) + ": " + v);
  }
  const auto natural = BicyclicModule::natural();
  rep.expect(bicyclic_action(natural, "a", 0).empty(), "a kills 0 in V_N");
  for (long i = 0; i <= 10; ++i) {
    const auto v = bicyclic_action(natural, "ab", i);
    rep.expect(v.size() == 1 && v.begin()->first == i && v.begin()->second == Rational(1), "ab acts as 1 on V_N");
  }
  const auto twisted = BicyclicModule::scalar(Rational(2));
  rep.expect(bicyclic_action(twisted, "ab", 0).at(0) == Rational(1), "ab acts as 1 on V_lambda");
  return rep;
}

SuiteReport suite_bialgebra(const SuiteParams& params) {
  SuiteReport rep{"bialgebra", 0, {}};
  const int degree = params.degree.value_or(5);
  const BialgebraReport b = bialgebra_check(degree);
  auto absorb = [&](const RelationReport& r, const std::string& what) {
    rep.checks += r.checks;
    if (!r.ok()) {
      rep.failures.push_back(what + ": " + std::to_string(r.violations.size()) + " of " + std::to_string(r.checks) +
                             " cases fail, first: " + r.violations.front());
    }
  };
  absorb(b.coassociativity, "coassociativity");
  absorb(b.counit, "counit");
  absorb(b.associativity, "associativity");
  absorb(b.multiplicativity, "multiplicativity of the coproduct");
  absorb(phi_check(0, degree), "Phi preserves product and coproduct");
  absorb(phi_check(params.p.value_or(2), params.degree.value_or(6)), "Phi intertwines the operator families");
  return rep;
}

SuiteReport suite_primefield(const SuiteParams& params) {
  SuiteReport rep{"primefield", 0, {}};
  std::vector<int> primes{2, 3};
  if (params.p) primes = {*params.p};
  for (int n = 1; n <= 3; ++n) {
    if (params.n && *params.n != n) continue;
    for (int p : primes) {
      for (const auto& row : prime_field_check(n, p)) {
        const std::string where = row.op + " n=" + std::to_string(n) + " p=" + std::to_string(p);
        rep.expect(row.splits, "characteristic polynomial splits over F_p for " + where);
        rep.expect(row.routes_agree, "rational and modular characteristic polynomials agree for " + where);
      }
    }
  }
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"monoid", "dimension", "representations", "jm",
                                              "bratteli", "branching", "gelfand", "centrality",
                                              "chevalley", "bialgebra", "primefield", "all"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  static const std::map<std::string, std::function<SuiteReport(const SuiteParams&)>> table{
      {"monoid", suite_monoid},         {"dimension", suite_dimension},   {"representations", suite_representations},
      {"jm", suite_jm},                 {"bratteli", suite_bratteli},     {"branching", suite_branching},
      {"gelfand", suite_gelfand},       {"centrality", suite_centrality}, {"chevalley", suite_chevalley},
      {"bialgebra", suite_bialgebra},   {"primefield", suite_primefield}};
  if (name == "all") {
    SuiteReport all{"all", 0, {}};
    for (const auto& [n, fn] : table) {
      const SuiteReport part = fn(params);
      all.checks += part.checks;
      for (const auto& f : part.failures) all.failures.push_back(n + ": " + f);
    }
    return all;
  }
  const auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second(params);
}

}  // namespace rookrep
