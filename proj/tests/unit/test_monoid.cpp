#include <doctest.h>

#include <set>

#include "rookrep/matrix.hpp"
#include "rookrep/monoid.hpp"

using namespace rookrep;

namespace {

CycMatrix as_matrix(const RookElem& s) {
  CycMatrix m(static_cast<std::size_t>(s.n()), static_cast<std::size_t>(s.n()), s.r());
  for (int c = 0; c < s.n(); ++c) {
    if (s.row_of(c) >= 0) m(static_cast<std::size_t>(s.row_of(c)), static_cast<std::size_t>(c)) = cyc_root_power(s.r(), s.label_of(c));
  }
  return m;
}

CycMatrix plain_transpose(const CycMatrix& m) {
  CycMatrix t(m.cols(), m.rows(), m.order());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  }
  return t;
}

}  // namespace

TEST_CASE("orders") {
  CHECK(monoid_order(2, 1) == 7);
  CHECK(monoid_order(3, 1) == 34);
  CHECK(monoid_order(2, 2) == 17);
  CHECK(monoid_order(0, 5) == 1);
  CHECK(enumerate_elements(2, 1).size() == 7);
  CHECK(enumerate_elements(2, 2).size() == 17);
  CHECK_THROWS(enumerate_elements(6, 8));
}

TEST_CASE("composition is matrix multiplication") {
  for (const auto& [n, r] : std::vector<std::pair<int, int>>{{2, 3}, {3, 1}, {3, 2}}) {
    const auto elems = enumerate_elements(n, r);
    for (const auto& a : elems) {
      const CycMatrix ma = as_matrix(a);
      for (const auto& b : elems) CHECK(as_matrix(a * b) == ma * as_matrix(b));
    }
  }
}

TEST_CASE("transpose and inverse reverse products") {
  const auto elems = enumerate_elements(2, 3);
  for (const auto& a : elems) {
    CHECK(as_matrix(a.transpose()) == plain_transpose(as_matrix(a)));
    CHECK(a.inverse().inverse() == a);
    CHECK(a * a.inverse() * a == a);
    for (const auto& b : elems) {
      CHECK((a * b).transpose() == b.transpose() * a.transpose());
      CHECK((a * b).inverse() == b.inverse() * a.inverse());
    }
  }
}

TEST_CASE("generators") {
  const Generators g = generators(3, 4);
  CHECK(g.P.rank() == 2);
  CHECK(g.P * g.P == g.P);
  RookElem q = RookElem::identity(3, 4);
  for (int k = 0; k < 4; ++k) q = q * g.Q;
  CHECK(q == RookElem::identity(3, 4));
  CHECK(g.s.size() == 2);
  CHECK(g.s[0] * g.s[0] == RookElem::identity(3, 4));
  CHECK(g.s[0] * g.s[1] * g.s[0] == g.s[1] * g.s[0] * g.s[1]);
  CHECK(transposition(3, 4, 1, 3) == g.s[0] * g.s[1] * g.s[0]);
  CHECK(diagonal_idempotent(3, 4, {1}) == g.P);
  CHECK(diagonal_root(3, 4, 1, 1) == g.Q);
}

TEST_CASE("words reproduce every element") {
  for (int n = 1; n <= 3; ++n) {
    for (int r = 1; r <= 3; ++r) {
      for (const auto& sigma : enumerate_elements(n, r)) CHECK(evaluate_word(word_for(sigma), n, r) == sigma);
    }
  }
}

TEST_CASE("group factorization examples") {
  const RookElem q = gen_Q(2, 3);
  CHECK(word_to_string(group_factorize(q * q)) == "Q Q");
  const RookElem t = transposition(3, 1, 1, 3);
  CHECK(evaluate_word(group_factorize(t), 3, 1) == t);
  const RookElem d = diagonal_root(2, 2, 2, 1);
  const Word w = group_factorize(d);
  CHECK(evaluate_word(w, 2, 2) == d);
  CHECK(w == Word{{Letter::Kind::S, 1}, {Letter::Kind::Q, 0}, {Letter::Kind::S, 1}});
}

TEST_CASE("cycle types") {
  CHECK(cycle_type(RookElem(3, 1, {2, -1, 0}, {0, 0, 0})) == Partition{2});
  CHECK(cycle_type(RookElem::identity(3, 1)) == Partition{1, 1, 1});
  CHECK(cycle_type(RookElem::zero(3, 1)) == Partition{});
  CHECK_FALSE(cycle_type(RookElem(2, 1, {1, -1}, {0, 0})).has_value());
}

TEST_CASE("left cells") {
  for (int i = 0; i <= 3; ++i) {
    const auto basis = lcell_basis(i, 3, 2);
    CHECK(basis.size() == static_cast<std::size_t>(i == 0 || i == 3 ? 1 : 3));
    for (const auto& h : basis) CHECK(in_lcell(h, i));
  }
  CHECK(lcell_element({0, 2}, 3, 1) == RookElem(3, 1, {0, 2, -1}, {0, 0, 0}));
  CHECK_FALSE(in_lcell(RookElem(3, 1, {-1, 0, -1}, {0, 0, 0}), 1));
}

TEST_CASE("idempotents") {
  CHECK(idempotent_E({}, 2, 1) == AlgebraElem(RookElem::identity(2, 1)));
  const AlgebraElem E = idempotent_E({1, 2}, 2, 1);
  CHECK(E * E == E);
  const AlgebraElem E1 = idempotent_E({1}, 3, 2);
  CHECK((E1 * AlgebraElem(diagonal_idempotent(3, 2, {1}))).is_zero());
  CHECK((AlgebraElem(diagonal_idempotent(3, 2, {1})) * E1).is_zero());
}

TEST_CASE("algebra multiplication is associative") {
  const auto elems = enumerate_elements(2, 2);
  auto combo = [&](std::size_t shift) {
    AlgebraElem x(2, 2);
    for (std::size_t k = 0; k < elems.size(); k += 3) {
      x.add_term(elems[(k + shift) % elems.size()], cyc_root_power(2, static_cast<long>(k)) * Rational(static_cast<long>(k % 4) + 1));
    }
    return x;
  };
  const AlgebraElem a = combo(0);
  const AlgebraElem b = combo(1);
  const AlgebraElem c = combo(5);
  CHECK((a * b) * c == a * (b * c));
  CHECK(commutator(a, a).is_zero());
}
