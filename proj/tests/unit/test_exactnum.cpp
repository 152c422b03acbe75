#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>

#include "rookrep/exactnum.hpp"

using namespace rookrep;

namespace {

std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

std::complex<double> evaluate(const CycElem& z) {
  const double pi = std::acos(-1.0);
  std::complex<double> s = 0;
  for (std::size_t k = 0; k < z.coeffs().size(); ++k) {
    const double c = z.coeffs()[k].value().get_d();
    s += c * std::polar(1.0, 2 * pi * static_cast<double>(k) / z.order());
  }
  return s;
}

CycElem sample(int r, int seed) {
  std::vector<Rational> c;
  for (int k = 0; k < r; ++k) c.emplace_back((seed * 7 + k * 3) % 5 - 2, 1 + (seed + k) % 3);
  return CycElem(r, c);
}

}  // namespace

TEST_CASE("rationals stay reduced") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).denominator_str() == "2");
  CHECK(Rational(3, -6).numerator_str() == "-1");
  CHECK(Rational::from_strings("-10", "4") == Rational(-5, 2));
  CHECK(Rational(6, 3).to_long() == 2);
  CHECK_FALSE(Rational(1, 3).to_long().has_value());
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK_THROWS(Rational(0).inverse());
}

TEST_CASE("cyclotomic polynomials multiply out to x^n - 1") {
  for (int n = 1; n <= 30; ++n) {
    std::vector<long> prod{1};
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
    }
    std::vector<long> expected(static_cast<std::size_t>(n) + 1, 0);
    expected.front() = -1;
    expected.back() = 1;
    CHECK(prod == expected);
  }
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("totient matches gcd count") {
  for (int r = 1; r <= 40; ++r) {
    int count = 0;
    for (int k = 1; k <= r; ++k) count += std::gcd(k, r) == 1;
    CHECK(totient(r) == count);
  }
}

TEST_CASE("root powers") {
  CHECK(cyc_root_power(1, 5) == CycElem(1, Rational(1)));
  CHECK(cyc_root_power(4, 6) == cyc_root_power(4, 2));
  CHECK(cyc_root_power(3, -1) == cyc_root_power(3, 2));
  CHECK(cyc_sum_root_powers(3, 0) == CycElem(3, Rational(3)));
  CHECK(cyc_sum_root_powers(3, 1).is_zero());
  CHECK(cyc_sum_root_powers(1, 7) == CycElem(1, Rational(1)));
  for (int r = 1; r <= 12; ++r) {
    for (int s = -5; s <= 12; ++s) {
      CHECK(cyc_sum_root_powers(r, s) == CycElem(r, Rational(s % r == 0 ? r : 0)));
    }
  }
}

TEST_CASE("field identities") {
  const CycElem x = cyc_root_power(3, 1);
  CHECK(x * cyc_root_power(3, 2) == CycElem(3, Rational(1)));
  CHECK((x + (-x)).is_zero());
  CHECK((x + x) * Rational(1, 2) == x);
  CHECK((x * x * x).as_rational() == Rational(1));
  CHECK_FALSE(x.as_rational().has_value());
}

TEST_CASE("inverses") {
  for (int r = 1; r <= 12; ++r) {
    for (int seed = 0; seed < 6; ++seed) {
      const CycElem z = sample(r, seed);
      if (z.is_zero()) continue;
      CHECK(z * z.inverse() == CycElem(r, Rational(1)));
    }
  }
  CHECK_THROWS(CycElem(5).inverse());
}

TEST_CASE("arithmetic agrees with complex evaluation") {
  for (int r : {2, 3, 4, 5, 6, 8, 12}) {
    for (int a = 0; a < 4; ++a) {
      const CycElem u = sample(r, a);
      const CycElem v = sample(r, a + 11);
      CHECK(std::abs(evaluate(u * v) - evaluate(u) * evaluate(v)) < 1e-9);
      CHECK(std::abs(evaluate(u + v) - evaluate(u) - evaluate(v)) < 1e-9);
    }
  }
}

TEST_CASE("mixing orders is rejected") {
  CHECK_THROWS(CycElem(3) + CycElem(4));
}
