#include "rookrep/jucysmurphy.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace rookrep {

AlgebraElem twisted_transposition_sum(int a, int b, int n, int r) {
  AlgebraElem out(n, r);
  const RookElem swap = transposition(n, r, a, b);
  for (int l = 0; l < r; ++l) {
    const RookElem d = diagonal_root(n, r, a, l) * diagonal_root(n, r, b, -l);
    out.add_term(d * swap, CycElem(r, Rational(1)));
  }
  return out;
}

JmFamily jm_elements(int n, int r) {
  if (n < 1) throw std::invalid_argument("jm_elements: n must be positive");
  JmFamily jm;
  jm.n = n;
  jm.r = r;
  const CycElem inv_r(r, Rational(1, r));
  jm.X.push_back(AlgebraElem(gen_Q(n, r)) - AlgebraElem(gen_P(n, r)));
  jm.Y.emplace_back(n, r);
  for (int j = 2; j <= n; ++j) {
    const AlgebraElem s(gen_s(n, r, j - 1));
    jm.X.push_back(s * jm.X.back() * s);
    AlgebraElem y(n, r);
    for (int m = 1; m < j; ++m) y += idempotent_E({m, j}, n, r) * twisted_transposition_sum(m, j, n, r);
    jm.Y.push_back(y * inv_r);
  }
  return jm;
}

AlgebraElem jm_Y_recursive(const JmFamily& jm, int j) {
  if (j < 2 || j > jm.n) throw std::out_of_range("jm_Y_recursive: need 2 <= j <= n");
  const int n = jm.n;
  const int r = jm.r;
  const AlgebraElem s(gen_s(n, r, j - 1));
  const AlgebraElem prev = jm.Y[static_cast<std::size_t>(j - 2)];
  const AlgebraElem corr = idempotent_E({j - 1, j}, n, r) * twisted_transposition_sum(j - 1, j, n, r);
  return s * prev * s + corr * CycElem(r, Rational(1, r));
}

std::pair<std::vector<CycElem>, std::vector<CycElem>> predicted_eigenvalues(const MultiTableau& L) {
  std::vector<CycElem> x;
  std::vector<CycElem> y;
  for (int i = 1; i <= L.n(); ++i) {
    const auto st = tableau_stats(L, i);
    x.push_back(st.sign);
    y.push_back(CycElem(L.r(), Rational(st.present ? st.content : 0)));
  }
  return {x, y};
}

std::string eigenvalue_key(const std::vector<CycElem>& x, const std::vector<CycElem>& y) {
  std::string key = "X:";
  for (const auto& v : x) key += v.to_string() + ";";
  key += " Y:";
  for (const auto& v : y) key += v.to_string() + ";";
  return key;
}

JmSpectrum jm_spectrum(const Representation& rep, const JmFamily& jm) {
  if (rep.n != jm.n || rep.r != jm.r) throw std::invalid_argument("jm_spectrum: family size mismatch");
  ElementActionCache cache(rep.mats);
  std::vector<CycMatrix> xs;
  std::vector<CycMatrix> ys;
  for (const auto& x : jm.X) xs.push_back(cache.algebra(x));
  for (const auto& y : jm.Y) ys.push_back(cache.algebra(y));
  JmSpectrum out;
  for (int i = 1; i <= rep.n; ++i) {
    if (!xs[static_cast<std::size_t>(i - 1)].is_diagonal()) {
      out.violations.push_back("X" + std::to_string(i) + " is not diagonal");
    }
    if (!ys[static_cast<std::size_t>(i - 1)].is_diagonal()) {
      out.violations.push_back("Y" + std::to_string(i) + " is not diagonal");
    }
  }
  for (std::size_t k = 0; k < rep.basis.size(); ++k) {
    SpectrumRow row{rep.basis[k], {}, {}};
    for (int i = 0; i < rep.n; ++i) {
      row.x.push_back(xs[static_cast<std::size_t>(i)](k, k));
      row.y.push_back(ys[static_cast<std::size_t>(i)](k, k));
    }
    const auto [px, py] = predicted_eigenvalues(rep.basis[k]);
    if (!(px == row.x) || !(py == row.y)) {
      out.violations.push_back("eigenvalues differ from prediction on " + rep.basis[k].to_string());
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

JmSpectrum jm_spectrum(const Representation& rep) { return jm_spectrum(rep, jm_elements(rep.n, rep.r)); }

AlgebraElem elementary_symmetric(const std::vector<AlgebraElem>& xs, int k) {
  if (xs.empty()) throw std::invalid_argument("elementary_symmetric: empty family");
  const int n = xs.front().n();
  const int r = xs.front().r();
  AlgebraElem out(n, r);
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(pick.size()) == k) {
      AlgebraElem term(RookElem::identity(n, r));
      for (auto idx : pick) term = term * xs[idx];
      out += term;
      return;
    }
    for (std::size_t t = start; t < xs.size(); ++t) {
      pick.push_back(t);
      rec(t + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

CentralityReport central_symmetric_polys(int n, int r, int k) {
  const JmFamily jm = jm_elements(n, r);
  CentralityReport rep{elementary_symmetric(jm.X, k), elementary_symmetric(jm.Y, k), {}};
  const Generators g = generators(n, r);
  std::vector<std::pair<std::string, AlgebraElem>> gens{{"P", AlgebraElem(g.P)}, {"Q", AlgebraElem(g.Q)}};
  for (std::size_t j = 0; j < g.s.size(); ++j) gens.emplace_back("s" + std::to_string(j + 1), AlgebraElem(g.s[j]));
  for (const auto& [name, x] : gens) {
    if (!commutator(rep.eX, x).is_zero()) rep.failures.push_back("e" + std::to_string(k) + "(X) vs " + name);
    if (!commutator(rep.eY, x).is_zero()) rep.failures.push_back("e" + std::to_string(k) + "(Y) vs " + name);
  }
  return rep;
}

IntMatrix regular_left_matrix(const AlgebraElem& x, const std::vector<RookElem>& elements) {
  std::map<RookElem, std::size_t> index;
  for (std::size_t k = 0; k < elements.size(); ++k) index.emplace(elements[k], k);
  IntMatrix m(elements.size(), std::vector<long>(elements.size(), 0));
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& [tau, c] : x.terms()) {
      const auto q = c.as_rational();
      const auto v = q ? q->to_long() : std::nullopt;
      if (!v) throw std::invalid_argument("regular_left_matrix: non-integral coefficient");
      m[index.at(tau * elements[k])][k] += *v;
    }
  }
  return m;
}

std::vector<PrimeFieldRow> prime_field_check(int n, long p) {
  const auto elements = enumerate_elements(n, 1);
  const JmFamily jm = jm_elements(n, 1);
  std::vector<PrimeFieldRow> out;
  auto run = [&](const std::string& name, const AlgebraElem& x) {
    const IntMatrix m = regular_left_matrix(x, elements);
    PrimeFieldRow row;
    row.op = name;
    row.charpoly_q = charpoly(m);
    row.charpoly_p = charpoly_mod_p(m, p);
    row.splits = splits_over_prime_field(row.charpoly_p, p);
    row.routes_agree = row.charpoly_q.size() == row.charpoly_p.size();
    for (std::size_t d = 0; row.routes_agree && d < row.charpoly_q.size(); ++d) {
      const auto v = row.charpoly_q[d].to_long();
      row.routes_agree = v && mod_floor(*v, p) == row.charpoly_p[d];
    }
    out.push_back(std::move(row));
  };
  for (int i = 1; i <= n; ++i) run("X" + std::to_string(i), jm.X[static_cast<std::size_t>(i - 1)]);
  for (int i = 1; i <= n; ++i) run("Y" + std::to_string(i), jm.Y[static_cast<std::size_t>(i - 1)]);
  return out;
}

}  // namespace rookrep
