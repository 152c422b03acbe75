#ifndef ROOKREP_EXACTNUM_HPP
#define ROOKREP_EXACTNUM_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace rookrep {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  /// Parses decimal numerator/denominator strings ("-3", "4").
  static Rational from_strings(std::string_view num, std::string_view den);

  const mpq_class& value() const { return v_; }
  std::string numerator_str() const;
  std::string denominator_str() const;
  std::string to_string() const;

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const;
  int sign() const { return sgn(v_); }
  /// The value as a machine integer when it is integral and fits.
  std::optional<long> to_long() const;

  Rational inverse() const;
  Rational operator-() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Largest order accepted by CycElem.
inline constexpr int kMaxCyclotomicOrder = 64;

/// Integer coefficients (constant term first) of the r-th cyclotomic polynomial.
const std::vector<long>& cyclotomic_polynomial(int r);

/// Euler totient of r, i.e. the degree of the r-th cyclotomic polynomial.
int totient(int r);

/// Element of Q(xi), xi a primitive r-th root of unity, stored as r coefficients
/// of powers of x. The canonical representative is the remainder modulo the r-th
/// cyclotomic polynomial, so coefficients at degree >= totient(r) are zero and
/// equality is coefficient-wise.
class CycElem {
public:
  explicit CycElem(int order);
  CycElem(int order, const Rational& scalar);
  /// Accepts any coefficient list of length <= order (or longer; reduced mod x^r - 1 first).
  CycElem(int order, std::vector<Rational> coeffs);

  int order() const { return order_; }
  /// Coefficients of x^0..x^{r-1} of the canonical representative.
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// The rational value when this element lies in Q.
  std::optional<Rational> as_rational() const;
  std::string to_string() const;

  CycElem inverse() const;
  CycElem operator-() const;

  CycElem& operator+=(const CycElem& o);
  CycElem& operator-=(const CycElem& o);
  CycElem& operator*=(const CycElem& o);
  CycElem& operator*=(const Rational& s);
  CycElem& operator/=(const CycElem& o);

  friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
  friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
  friend CycElem operator*(CycElem a, const CycElem& b) { return a *= b; }
  friend CycElem operator*(CycElem a, const Rational& s) { return a *= s; }
  friend CycElem operator*(const Rational& s, CycElem a) { return a *= s; }
  friend CycElem operator/(CycElem a, const CycElem& b) { return a /= b; }

  friend bool operator==(const CycElem& a, const CycElem& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

private:
  void check_order(const CycElem& o) const;
  void reduce();

  int order_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycElem& z);

/// The class of x^{k mod r}.
CycElem cyc_root_power(int r, long k);

/// sum_{l=0}^{r-1} x^{l s}: r when r divides s, zero otherwise.
CycElem cyc_sum_root_powers(int r, long s);

/// Non-negative remainder of k modulo m.
constexpr long mod_floor(long k, long m) {
  const long t = k % m;
  return t < 0 ? t + m : t;
}

}  // namespace rookrep

#endif  // ROOKREP_EXACTNUM_HPP
