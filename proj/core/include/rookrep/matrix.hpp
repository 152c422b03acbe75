#ifndef ROOKREP_MATRIX_HPP
#define ROOKREP_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rookrep/exactnum.hpp"

namespace rookrep {

/// Dense matrix over Q(xi). Products skip zero entries, so the sparse generator
/// matrices of monomial-type representations multiply cheaply.
class CycMatrix {
public:
  CycMatrix(std::size_t rows, std::size_t cols, int order);
  static CycMatrix identity(std::size_t n, int order);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int order() const { return order_; }

  CycElem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const CycElem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_diagonal() const;
  CycMatrix column(std::size_t j) const;

  CycMatrix& operator+=(const CycMatrix& o);
  CycMatrix& operator-=(const CycMatrix& o);
  CycMatrix& operator*=(const CycElem& s);

  friend CycMatrix operator+(CycMatrix a, const CycMatrix& b) { return a += b; }
  friend CycMatrix operator-(CycMatrix a, const CycMatrix& b) { return a -= b; }
  friend CycMatrix operator*(CycMatrix a, const CycElem& s) { return a *= s; }
  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  friend bool operator==(const CycMatrix& a, const CycMatrix& b);

private:
  std::size_t rows_;
  std::size_t cols_;
  int order_;
  std::vector<CycElem> data_;
};

/// Matrix power with non-negative exponent.
CycMatrix power(const CycMatrix& m, unsigned exponent);

/// Basis (as columns) of the right null space {v : m v = 0}.
CycMatrix null_space(const CycMatrix& m);

std::size_t rank(const CycMatrix& m);

/// Horizontal block [a | b].
CycMatrix hconcat(const CycMatrix& a, const CycMatrix& b);

// ---------------------------------------------------------------------------
// Characteristic polynomials (coefficients constant term first, monic).

using IntMatrix = std::vector<std::vector<long>>;

/// Characteristic polynomial over Q.
std::vector<Rational> charpoly(const IntMatrix& m);

/// Characteristic polynomial over F_p, entries reduced into [0, p).
std::vector<long> charpoly_mod_p(const IntMatrix& m, long p);

/// True when the polynomial (over F_p) is a product of linear factors.
bool splits_over_prime_field(std::vector<long> poly, long p);

}  // namespace rookrep

#endif  // ROOKREP_MATRIX_HPP
