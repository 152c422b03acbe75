#include <doctest.h>

#include "rookrep/seminormal.hpp"

using namespace rookrep;

namespace {

CycElem trace(const CycMatrix& m) {
  CycElem t(m.order());
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

CycElem conjugate(const CycElem& z) {
  std::vector<Rational> c(static_cast<std::size_t>(z.order()));
  for (std::size_t k = 0; k < z.coeffs().size(); ++k) {
    c[static_cast<std::size_t>(mod_floor(-static_cast<long>(k), z.order()))] += z.coeffs()[k];
  }
  return CycElem(z.order(), c);
}

std::vector<RookElem> group_elements(int n, int r) {
  std::vector<RookElem> out;
  for (const auto& e : enumerate_elements(n, r)) {
    if (e.rank() == n) out.push_back(e);
  }
  return out;
}

// Dimension of the span of all representing matrices.
std::size_t span_dimension(const ModuleMatrices& m, const std::vector<RookElem>& elems) {
  const std::size_t d2 = m.dim * m.dim;
  CycMatrix vecs(d2, elems.size(), m.r);
  for (std::size_t k = 0; k < elems.size(); ++k) {
    const CycMatrix a = act_element(m, elems[k]);
    for (std::size_t i = 0; i < d2; ++i) vecs(i, k) = a(i / m.dim, i % m.dim);
  }
  return rank(vecs);
}

}  // namespace

TEST_CASE("group characters satisfy Schur orthogonality") {
  for (const auto& [n, r] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {2, 3}, {3, 2}}) {
    const auto G = group_elements(n, r);
    std::vector<std::vector<CycElem>> chars;
    for (const auto& lambda : multipartitions_of(r, n)) {
      const Representation rep = symgroup_irrep(lambda);
      std::vector<CycElem> chi;
      for (const auto& g : G) chi.push_back(trace(act_element(rep.mats, g)));
      chars.push_back(chi);
    }
    for (std::size_t a = 0; a < chars.size(); ++a) {
      for (std::size_t b = 0; b < chars.size(); ++b) {
        CycElem inner(r);
        for (std::size_t k = 0; k < G.size(); ++k) inner += chars[a][k] * conjugate(chars[b][k]);
        CHECK(inner == CycElem(r, Rational(a == b ? static_cast<long>(G.size()) : 0)));
      }
    }
  }
}

TEST_CASE("rook irreducibles span the full matrix algebra") {
  for (int n = 1; n <= 3; ++n) {
    for (int r = 1; r <= 2; ++r) {
      const auto elems = enumerate_elements(n, r);
      for (const auto& [k, lambda] : multipartitions_up_to(r, n)) {
        const Representation rep = rook_irrep(lambda, n);
        CHECK(span_dimension(rep.mats, elems) == rep.mats.dim * rep.mats.dim);
      }
    }
  }
}

TEST_CASE("generator relations hold in every irreducible") {
  for (int n = 1; n <= 3; ++n) {
    for (int r = 1; r <= 3; ++r) {
      for (const auto& [k, lambda] : multipartitions_up_to(r, n)) {
        const Representation rep = rook_irrep(lambda, n);
        const auto& m = rep.mats;
        const CycMatrix id = CycMatrix::identity(m.dim, r);
        CHECK(*m.P * *m.P == *m.P);
        CHECK(power(*m.Q, static_cast<unsigned>(r)) == id);
        CHECK(*m.P * *m.Q == *m.P);
        for (std::size_t j = 0; j < m.s.size(); ++j) CHECK(m.s[j] * m.s[j] == id);
        if (n >= 2) CHECK(*m.P * m.s[0] * *m.P * m.s[0] == m.s[0] * *m.P * m.s[0] * *m.P);
      }
    }
  }
}

TEST_CASE("oracle examples") {
  const InducedOracle oracle({{1}}, 2);
  REQUIRE(oracle.basis().size() == 2);
  const std::size_t h1 = oracle.basis()[0].contains(1) ? 0 : 1;
  const std::size_t h2 = 1 - h1;
  CHECK(oracle.basis()[h2].contains(2));
  CHECK(oracle.act_on(gen_P(2, 1), h1).is_zero());
  const CycMatrix v = oracle.act_on(gen_s(2, 1, 1), h1);
  CHECK(v(h1, 0).is_zero());
  CHECK(v(h2, 0) == CycElem(1, Rational(1)));
  CHECK(oracle.matrix(RookElem::identity(2, 1)) == CycMatrix::identity(2, 1));
}

TEST_CASE("spectrum decomposition") {
  const Representation a = rook_irrep({{1}, {1}}, 3);
  CHECK(decompose_by_spectrum(a.mats) == std::map<Multipartition, int>{{{{1}, {1}}, 1}});
  CHECK(decompose_by_spectrum(direct_sum(a.mats, a.mats)) == std::map<Multipartition, int>{{{{1}, {1}}, 2}});
  const Representation b = rook_irrep({{2}, {}}, 3);
  CHECK(decompose_by_spectrum(direct_sum(a.mats, b.mats)) ==
        std::map<Multipartition, int>{{{{1}, {1}}, 1}, {{{2}, {}}, 1}});
}

TEST_CASE("restriction drops the last transposition") {
  const Representation a = rook_irrep({{2, 1}}, 3);
  const ModuleMatrices res = restrict_module(a.mats);
  CHECK(res.n == 2);
  CHECK(res.s.size() == 1);
  CHECK(res.dim == a.mats.dim);
}

TEST_CASE("Gelfand model is a module of the right size") {
  for (int n = 1; n <= 3; ++n) {
    for (int r = 1; r <= 3; ++r) {
      const GelfandModel g = gelfand_model(n, r);
      std::size_t dims = 0;
      for (const auto& [k, lambda] : multipartitions_up_to(r, n)) dims += enumerate_tableaux(lambda, n).size();
      CHECK(g.basis.size() == dims);
      if (n <= 2) {
        const auto elems = enumerate_elements(n, r);
        ElementActionCache cache(g.mats);
        for (const auto& a : elems) {
          for (const auto& b : elems) CHECK(cache.get(a) * cache.get(b) == cache.get(a * b));
        }
      }
    }
  }
}

TEST_CASE("Gelfand model decompositions") {
  CHECK(decompose_by_spectrum(gelfand_model(2, 1).mats) ==
        std::map<Multipartition, int>{{{{}}, 1}, {{{1}}, 1}, {{{2}}, 1}, {{{1, 1}}, 1}});
  for (int n = 1; n <= 3; ++n) {
    std::map<Multipartition, int> all;
    for (const auto& [k, lambda] : multipartitions_up_to(1, n)) all[lambda] = 1;
    CHECK(decompose_by_spectrum(gelfand_model(n, 1).mats) == all);
  }
  // With r = 2 the generator Q acts trivially on the rank one symmetric elements, so the
  // sign character of C_2 never appears there.
  const auto two = decompose_by_spectrum(gelfand_model(1, 2).mats);
  CHECK(two.count({{}, {1}}) == 0);
  CHECK(two.at({{1}, {}}) == 2);
}
