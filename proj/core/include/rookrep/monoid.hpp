#ifndef ROOKREP_MONOID_HPP
#define ROOKREP_MONOID_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rookrep/combinatorics.hpp"
#include "rookrep/exactnum.hpp"

namespace rookrep {

/// n x n matrix over C_r plus zero with at most one nonzero entry per row and column.
/// Stored column-wise: column j (0-based) has xi^{label(j)} in row row_of(j), or is zero.
class RookElem {
public:
  RookElem(int n, int r);
  RookElem(int n, int r, std::vector<int> rows, std::vector<int> labels);

  static RookElem identity(int n, int r);
  static RookElem zero(int n, int r) { return RookElem(n, r); }

  int n() const { return n_; }
  int r() const { return r_; }
  /// Row (0-based) of the nonzero entry of column j, or -1.
  int row_of(int j) const { return rows_[static_cast<std::size_t>(j)]; }
  int label_of(int j) const { return labels_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& rows() const { return rows_; }
  const std::vector<int>& labels() const { return labels_; }

  int rank() const;
  /// Columns with a nonzero entry, increasing.
  std::vector<int> domain() const;
  /// Rows with a nonzero entry, increasing.
  std::vector<int> image() const;

  /// Plain matrix transpose.
  RookElem transpose() const;
  /// Conjugate transpose: the inverse partial map with negated labels.
  RookElem inverse() const;

  std::string to_string() const;

  friend bool operator==(const RookElem& a, const RookElem& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.rows_ == b.rows_ && a.labels_ == b.labels_;
  }
  /// Rank, then domain, then row word, then labels.
  friend bool operator<(const RookElem& a, const RookElem& b);

private:
  int n_;
  int r_;
  std::vector<int> rows_;
  std::vector<int> labels_;
};

/// Matrix product sigma * tau.
RookElem compose(const RookElem& sigma, const RookElem& tau);
inline RookElem operator*(const RookElem& a, const RookElem& b) { return compose(a, b); }

struct Generators {
  RookElem P;
  RookElem Q;
  std::vector<RookElem> s;  // s[j-1] is s_j
};

Generators generators(int n, int r);
RookElem gen_P(int n, int r);
RookElem gen_Q(int n, int r);
/// Adjacent transposition s_j, 1 <= j < n.
RookElem gen_s(int n, int r, int j);
/// Transposition of positions a and b (1-based).
RookElem transposition(int n, int r, int a, int b);
/// Diagonal idempotent e_B: identity with the coordinates in B (1-based) zeroed.
RookElem diagonal_idempotent(int n, int r, const std::vector<int>& B);
/// Identity except xi^{label} at diagonal position k (1-based).
RookElem diagonal_root(int n, int r, int k, int label);

/// sum_k C(n,k)^2 k! r^k.
long monoid_order(int n, int r);
inline constexpr long kMaxEnumeratedElements = 200000;
/// All elements in the RookElem order; throws when the order exceeds kMaxEnumeratedElements.
std::vector<RookElem> enumerate_elements(int n, int r);

/// Cycle type of the permutation induced on the common support (r = 1 only);
/// nullopt when row and column supports differ.
std::optional<Partition> cycle_type(const RookElem& sigma);

/// h_Z for every i-subset Z of {1..n}, Z in lexicographic order.
std::vector<RookElem> lcell_basis(int i, int n, int r);
/// h_Z for a sorted 0-based row set Z.
RookElem lcell_element(const std::vector<int>& Z, int n, int r);
/// Rank i with columns i+1..n zero.
bool in_lcell(const RookElem& sigma, int i);

/// Finite linear combination of monoid elements over Q(xi).
class AlgebraElem {
public:
  AlgebraElem(int n, int r) : n_(n), r_(r) {}
  explicit AlgebraElem(const RookElem& sigma);

  int n() const { return n_; }
  int r() const { return r_; }
  const std::map<RookElem, CycElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const RookElem& sigma, const CycElem& coeff);

  AlgebraElem& operator+=(const AlgebraElem& o);
  AlgebraElem& operator-=(const AlgebraElem& o);
  AlgebraElem& operator*=(const CycElem& s);

  friend AlgebraElem operator+(AlgebraElem a, const AlgebraElem& b) { return a += b; }
  friend AlgebraElem operator-(AlgebraElem a, const AlgebraElem& b) { return a -= b; }
  friend AlgebraElem operator*(AlgebraElem a, const CycElem& s) { return a *= s; }
  friend AlgebraElem operator*(const AlgebraElem& a, const AlgebraElem& b);
  friend bool operator==(const AlgebraElem& a, const AlgebraElem& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

private:
  void check(const AlgebraElem& o) const;

  int n_;
  int r_;
  std::map<RookElem, CycElem> terms_;
};

AlgebraElem commutator(const AlgebraElem& a, const AlgebraElem& b);

/// E_A = sum over B in A of (-1)^{|B|} e_B, A given 1-based.
AlgebraElem idempotent_E(const std::vector<int>& A, int n, int r);

// ---------------------------------------------------------------------------
// Words in the generators

struct Letter {
  enum class Kind { P, Q, S };
  Kind kind;
  int j = 0;  // index of s_j
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Generator letters, multiplied left to right as matrices.
using Word = std::vector<Letter>;

std::string word_to_string(const Word& w);
RookElem evaluate_word(const Word& w, int n, int r);

/// A word in Q and the s_j equal to a full-rank element.
Word group_factorize(const RookElem& pi);
/// A word in P, Q and the s_j equal to an arbitrary element.
Word word_for(const RookElem& sigma);

}  // namespace rookrep

#endif  // ROOKREP_MONOID_HPP
