#include <doctest.h>

#include "rookrep/matrix.hpp"

using namespace rookrep;

namespace {

CycMatrix from_ints(const IntMatrix& m, int r = 1) {
  CycMatrix out(m.size(), m.empty() ? 0 : m[0].size(), r);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = CycElem(r, Rational(m[i][j]));
  }
  return out;
}

// Horner evaluation of a monic polynomial at a square matrix.
CycMatrix eval_poly(const std::vector<Rational>& c, const CycMatrix& a) {
  CycMatrix acc(a.rows(), a.cols(), a.order());
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * a + CycMatrix::identity(a.rows(), a.order()) * CycElem(a.order(), *it);
  }
  return acc;
}

}  // namespace

TEST_CASE("products and identity") {
  const CycMatrix a = from_ints({{1, 2}, {3, 4}});
  CHECK(a * CycMatrix::identity(2, 1) == a);
  CHECK(a * a == from_ints({{7, 10}, {15, 22}}));
  CHECK(power(a, 0) == CycMatrix::identity(2, 1));
  CHECK(power(a, 3) == a * a * a);
  CHECK(from_ints({{1, 0}, {0, 5}}).is_diagonal());
  CHECK_FALSE(a.is_diagonal());
}

TEST_CASE("rank and null space") {
  const CycMatrix a = from_ints({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  const CycMatrix k = null_space(a);
  CHECK(k.cols() == 1);
  CHECK((a * k).is_zero());
  CHECK(null_space(CycMatrix::identity(3, 1)).cols() == 0);
  CHECK(hconcat(a, k).cols() == 4);
}

TEST_CASE("null space over a cyclotomic field") {
  CycMatrix a(2, 2, 3);
  a(0, 0) = CycElem(3, Rational(1));
  a(0, 1) = cyc_root_power(3, 1);
  a(1, 0) = cyc_root_power(3, 2);
  a(1, 1) = CycElem(3, Rational(1));
  CHECK(rank(a) == 1);
  CHECK((a * null_space(a)).is_zero());
}

TEST_CASE("characteristic polynomials satisfy Cayley-Hamilton") {
  const std::vector<IntMatrix> samples{
      {{2, 1}, {1, 2}}, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, {{1, 2, 0, 0}, {0, 1, 3, 0}, {4, 0, 0, 1}, {0, 0, 5, 2}}};
  CHECK(charpoly(samples[0]) == std::vector<Rational>{3, -4, 1});
  for (const auto& m : samples) {
    CHECK(eval_poly(charpoly(m), from_ints(m)).is_zero());
  }
}

TEST_CASE("modular characteristic polynomials") {
  const IntMatrix m{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  CHECK(charpoly_mod_p(m, 2) == std::vector<long>{1, 0, 0, 1});
  CHECK(splits_over_prime_field({1, 0, 1}, 2));
  CHECK_FALSE(splits_over_prime_field({1, 0, 1}, 3));
  CHECK(splits_over_prime_field({2, 0, 1}, 3));
  CHECK_FALSE(splits_over_prime_field({1, 1, 1}, 2));
}
