#include "rookrep/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace rookrep {

CycMatrix::CycMatrix(std::size_t rows, std::size_t cols, int order)
    : rows_(rows), cols_(cols), order_(order), data_(rows * cols, CycElem(order)) {}

CycMatrix CycMatrix::identity(std::size_t n, int order) {
  CycMatrix m(n, n, order);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycElem(order, Rational(1));
  return m;
}

bool CycMatrix::is_zero() const {
  for (const auto& z : data_) {
    if (!z.is_zero()) return false;
  }
  return true;
}

bool CycMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

CycMatrix CycMatrix::column(std::size_t j) const {
  CycMatrix c(rows_, 1, order_);
  for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

namespace {
void require_same_shape(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.order() != b.order()) {
    throw std::invalid_argument("CycMatrix: shape or order mismatch");
  }
}
}  // namespace

CycMatrix& CycMatrix::operator+=(const CycMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

CycMatrix& CycMatrix::operator-=(const CycMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

CycMatrix& CycMatrix::operator*=(const CycElem& s) {
  for (auto& z : data_) {
    if (!z.is_zero()) z *= s;
  }
  return *this;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols_ != b.rows_ || a.order_ != b.order_) {
    throw std::invalid_argument("CycMatrix: product shape or order mismatch");
  }
  CycMatrix c(a.rows_, b.cols_, a.order_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycElem& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const CycElem& bkj = b(k, j);
        if (!bkj.is_zero()) c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.order_ == b.order_ && a.data_ == b.data_;
}

CycMatrix power(const CycMatrix& m, unsigned exponent) {
  if (m.rows() != m.cols()) throw std::invalid_argument("power: matrix not square");
  CycMatrix out = CycMatrix::identity(m.rows(), m.order());
  for (unsigned k = 0; k < exponent; ++k) out = out * m;
  return out;
}

namespace {

// Row-reduces in place; returns pivot column of each pivot row.
std::vector<std::size_t> row_reduce(CycMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    }
    const CycElem inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const CycElem f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

CycMatrix null_space(const CycMatrix& m) {
  CycMatrix work = m;
  const auto pivots = row_reduce(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  CycMatrix basis(m.cols(), free_cols.size(), m.order());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = CycElem(m.order(), Rational(1));
    for (std::size_t p = 0; p < pivots.size(); ++p) basis(pivots[p], k) = -work(p, f);
  }
  return basis;
}

std::size_t rank(const CycMatrix& m) {
  CycMatrix work = m;
  return row_reduce(work).size();
}

CycMatrix hconcat(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows() != b.rows() || a.order() != b.order()) {
    throw std::invalid_argument("hconcat: row or order mismatch");
  }
  CycMatrix out(a.rows(), a.cols() + b.cols(), a.order());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Characteristic polynomials via Hessenberg reduction.

namespace {

struct RationalField {
  using T = Rational;
  T zero() const { return Rational{}; }
  T one() const { return Rational(1); }
  T from(long v) const { return Rational(v); }
  bool is_zero(const T& a) const { return a.is_zero(); }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T div(const T& a, const T& b) const { return a / b; }
};

struct PrimeField {
  long p;
  using T = long;
  T zero() const { return 0; }
  T one() const { return 1 % p; }
  T from(long v) const { return mod_floor(v, p); }
  bool is_zero(T a) const { return a == 0; }
  T add(T a, T b) const { return (a + b) % p; }
  T sub(T a, T b) const { return mod_floor(a - b, p); }
  T mul(T a, T b) const { return (a * b) % p; }
  T inv(T a) const {
    // Fermat inversion; p is prime.
    T result = 1;
    T base = a;
    long e = p - 2;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  T div(T a, T b) const { return mul(a, inv(b)); }
};

template <class F>
std::vector<typename F::T> hessenberg_charpoly(const IntMatrix& input, const F& f) {
  using T = typename F::T;
  const std::size_t n = input.size();
  std::vector<std::vector<T>> h(n, std::vector<T>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    if (input[i].size() != n) throw std::invalid_argument("charpoly: matrix not square");
    for (std::size_t j = 0; j < n; ++j) h[i][j] = f.from(input[i][j]);
  }
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && f.is_zero(h[piv][m - 1])) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (std::size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][m]);
    }
    for (std::size_t j = m + 1; j < n; ++j) {
      if (f.is_zero(h[j][m - 1])) continue;
      const T u = f.div(h[j][m - 1], h[m][m - 1]);
      for (std::size_t k = 0; k < n; ++k) h[j][k] = f.sub(h[j][k], f.mul(u, h[m][k]));
      for (std::size_t k = 0; k < n; ++k) h[k][m] = f.add(h[k][m], f.mul(u, h[k][j]));
    }
  }
  // p_k = charpoly of the leading k x k block.
  std::vector<std::vector<T>> polys(n + 1);
  polys[0] = {f.one()};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t m = k - 1;
    std::vector<T> next(k + 1, f.zero());
    const auto& prev = polys[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = f.add(next[d + 1], prev[d]);
      next[d] = f.sub(next[d], f.mul(h[m][m], prev[d]));
    }
    T prod = f.one();
    for (std::size_t i = m; i-- > 0;) {
      prod = f.mul(prod, h[i + 1][i]);
      if (f.is_zero(prod)) break;
      const T c = f.mul(h[i][m], prod);
      if (f.is_zero(c)) continue;
      const auto& pi = polys[i];
      for (std::size_t d = 0; d < pi.size(); ++d) next[d] = f.sub(next[d], f.mul(c, pi[d]));
    }
    polys[k] = std::move(next);
  }
  return polys[n];
}

}  // namespace

std::vector<Rational> charpoly(const IntMatrix& m) {
  return hessenberg_charpoly(m, RationalField{});
}

std::vector<long> charpoly_mod_p(const IntMatrix& m, long p) {
  if (p < 2) throw std::invalid_argument("charpoly_mod_p: p must be >= 2");
  return hessenberg_charpoly(m, PrimeField{p});
}

bool splits_over_prime_field(std::vector<long> poly, long p) {
  const PrimeField f{p};
  for (auto& c : poly) c = f.from(c);
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  bool progress = true;
  while (poly.size() > 1 && progress) {
    progress = false;
    for (long a = 0; a < p && poly.size() > 1; ++a) {
      // Synthetic division by (x - a).
      std::vector<long> q(poly.size() - 1);
      long carry = 0;
      for (std::size_t k = poly.size(); k-- > 0;) {
        const long v = f.add(poly[k], f.mul(carry, a));
        if (k == 0) {
          carry = v;
        } else {
          q[k - 1] = v;
          carry = v;
        }
      }
      if (carry == 0) {
        poly = std::move(q);
        progress = true;
        --a;  // retry the same root for multiplicity
      }
    }
  }
  return poly.size() == 1;
}

}  // namespace rookrep
