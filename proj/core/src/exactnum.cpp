#include "rookrep/exactnum.hpp"

#include <array>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rookrep {

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational Rational::from_strings(std::string_view num, std::string_view den) {
  mpz_class n;
  mpz_class d;
  if (n.set_str(std::string(num), 10) != 0 || d.set_str(std::string(den), 10) != 0) {
    throw std::invalid_argument("Rational: malformed integer string");
  }
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  return Rational(mpq_class(n, d));
}

std::string Rational::numerator_str() const { return v_.get_num().get_str(); }
std::string Rational::denominator_str() const { return v_.get_den().get_str(); }

std::string Rational::to_string() const {
  if (is_integer()) return numerator_str();
  return numerator_str() + "/" + denominator_str();
}

bool Rational::is_integer() const { return v_.get_den() == 1; }

std::optional<long> Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p()) return std::nullopt;
  return v_.get_num().get_si();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

namespace {

using IntPoly = std::vector<long>;

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t t = 0; t <= dn; ++t) num[k - dn + t] -= c * den[t];
  }
  return quot;
}

std::array<IntPoly, kMaxCyclotomicOrder + 1> build_cyclotomic_table() {
  std::array<IntPoly, kMaxCyclotomicOrder + 1> table;
  for (int r = 1; r <= kMaxCyclotomicOrder; ++r) {
    IntPoly p(static_cast<std::size_t>(r) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(r)] = 1;
    for (int d = 1; d < r; ++d) {
      if (r % d == 0) p = divide_monic(p, table[static_cast<std::size_t>(d)]);
    }
    table[static_cast<std::size_t>(r)] = std::move(p);
  }
  return table;
}

const std::array<IntPoly, kMaxCyclotomicOrder + 1>& cyclotomic_table() {
  static const auto table = build_cyclotomic_table();
  return table;
}

void check_order_range(int r) {
  if (r < 1 || r > kMaxCyclotomicOrder) {
    throw std::invalid_argument("CycElem: order must lie in [1, " +
                                std::to_string(kMaxCyclotomicOrder) + "], got " +
                                std::to_string(r));
  }
}

using QPoly = std::vector<Rational>;

void trim(QPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Remainder and quotient of a by b over Q; b nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {QPoly{}, a};
  QPoly q(a.size() - b.size() + 1);
  const Rational lead_inv = b.back().inverse();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k].is_zero()) continue;
    const Rational c = a[k] * lead_inv;
    const std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    for (std::size_t t = 0; t < b.size(); ++t) a[shift + t] -= c * b[t];
  }
  trim(a);
  trim(q);
  return {q, a};
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int r) {
  check_order_range(r);
  return cyclotomic_table()[static_cast<std::size_t>(r)];
}

int totient(int r) { return static_cast<int>(cyclotomic_polynomial(r).size()) - 1; }

// ---------------------------------------------------------------------------
// CycElem

CycElem::CycElem(int order) : order_(order) {
  check_order_range(order);
  coeffs_.assign(static_cast<std::size_t>(order), Rational{});
}

CycElem::CycElem(int order, const Rational& scalar) : CycElem(order) { coeffs_[0] = scalar; }

CycElem::CycElem(int order, std::vector<Rational> coeffs) : order_(order) {
  check_order_range(order);
  coeffs_.assign(static_cast<std::size_t>(order), Rational{});
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    coeffs_[k % static_cast<std::size_t>(order)] += coeffs[k];
  }
  reduce();
}

void CycElem::reduce() {
  const auto& phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = coeffs_.size(); k-- > deg;) {
    if (coeffs_[k].is_zero()) continue;
    const Rational c = coeffs_[k];
    for (std::size_t t = 0; t <= deg; ++t) {
      if (phi[t] != 0) coeffs_[k - deg + t] -= c * Rational(phi[t]);
    }
  }
}

void CycElem::check_order(const CycElem& o) const {
  if (order_ != o.order_) {
    throw std::invalid_argument("CycElem: mismatched orders " + std::to_string(order_) +
                                " and " + std::to_string(o.order_));
  }
}

bool CycElem::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::optional<Rational> CycElem::as_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return std::nullopt;
  }
  return coeffs_[0];
}

std::string CycElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    const Rational a = c.sign() < 0 ? -c : c;
    if (k == 0) {
      os << a;
    } else {
      if (!(a == Rational(1))) os << a << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

CycElem CycElem::operator-() const {
  CycElem out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycElem& CycElem::operator+=(const CycElem& o) {
  check_order(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

CycElem& CycElem::operator-=(const CycElem& o) {
  check_order(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

CycElem& CycElem::operator*=(const CycElem& o) {
  check_order(o);
  const std::size_t deg = static_cast<std::size_t>(totient(order_));
  if (deg == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * deg - 1);
  for (std::size_t i = 0; i < deg; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (!o.coeffs_[j].is_zero()) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  const auto& phi = cyclotomic_polynomial(order_);
  for (std::size_t k = prod.size(); k-- > deg;) {
    if (prod[k].is_zero()) continue;
    const Rational c = prod[k];
    for (std::size_t t = 0; t <= deg; ++t) {
      if (phi[t] != 0) prod[k - deg + t] -= c * Rational(phi[t]);
    }
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    coeffs_[k] = k < deg ? prod[k] : Rational{};
  }
  return *this;
}

CycElem& CycElem::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

CycElem CycElem::inverse() const {
  if (is_zero()) throw std::domain_error("CycElem: inverse of zero");
  if (auto q = as_rational()) return CycElem(order_, q->inverse());
  // Extended Euclid in Q[x]: track s with s*a = rem (mod phi).
  const auto& phi_int = cyclotomic_polynomial(order_);
  QPoly phi(phi_int.begin(), phi_int.end());
  QPoly a(coeffs_.begin(), coeffs_.end());
  trim(a);
  QPoly r0 = phi;
  QPoly r1 = a;
  QPoly s0;
  QPoly s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, rem] = divmod(r0, r1);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since phi is irreducible.
  const Rational c = r1.at(0).inverse();
  for (auto& t : s1) t *= c;
  return CycElem(order_, s1);
}

CycElem& CycElem::operator/=(const CycElem& o) {
  check_order(o);
  return *this *= o.inverse();
}

std::ostream& operator<<(std::ostream& os, const CycElem& z) { return os << z.to_string(); }

CycElem cyc_root_power(int r, long k) {
  check_order_range(r);
  std::vector<Rational> c(static_cast<std::size_t>(r));
  c[static_cast<std::size_t>(mod_floor(k, r))] = Rational(1);
  return CycElem(r, std::move(c));
}

CycElem cyc_sum_root_powers(int r, long s) {
  check_order_range(r);
  std::vector<Rational> c(static_cast<std::size_t>(r));
  for (long l = 0; l < r; ++l) c[static_cast<std::size_t>(mod_floor(l * s, r))] += Rational(1);
  return CycElem(r, std::move(c));
}

}  // namespace rookrep
