#ifndef ROOKREP_GROTHENDIECK_HPP
#define ROOKREP_GROTHENDIECK_HPP

#include <compare>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "rookrep/combinatorics.hpp"
#include "rookrep/exactnum.hpp"

namespace rookrep {

/// Basis symbol (lambda, m): the class of L^n_j(D^lambda) with m = n - j.
struct GrothKey {
  Partition lambda;
  int m = 0;
  auto operator<=>(const GrothKey&) const = default;
};

int degree(const GrothKey& k);

/// Finite combination of basis symbols. p = 0 means characteristic zero.
class GrothVector {
public:
  explicit GrothVector(int p = 0) : p_(p) {}
  static GrothVector basis(const Partition& lambda, int m, int p = 0);

  int p() const { return p_; }
  const std::map<GrothKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const GrothKey& k) const;

  void add(const GrothKey& k, const Rational& c);
  GrothVector& operator+=(const GrothVector& o);
  GrothVector& operator-=(const GrothVector& o);
  GrothVector& operator*=(const Rational& s);
  friend GrothVector operator+(GrothVector a, const GrothVector& b) { return a += b; }
  friend GrothVector operator-(GrothVector a, const GrothVector& b) { return a -= b; }
  friend GrothVector operator*(GrothVector a, const Rational& s) { return a *= s; }
  friend bool operator==(const GrothVector& a, const GrothVector& b) {
    return a.p_ == b.p_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

private:
  int p_;
  std::map<GrothKey, Rational> terms_;
};

/// e_i on a single p-regular partition; labels that are not p-regular are dropped.
std::map<Partition, long> kleshchev_e(const Partition& lambda, int i, int p);
/// f_i on a single p-regular partition; labels that are not p-regular are dropped.
std::map<Partition, long> kleshchev_f(const Partition& lambda, int i, int p);

GrothVector kleshchev_res(int i, const GrothVector& v);
GrothVector kleshchev_ind(int i, const GrothVector& v);
GrothVector op_A(const GrothVector& v);
GrothVector op_B(const GrothVector& v);

/// Applies a word such as "f0 f1 e0 B A"; the rightmost operator acts first.
GrothVector apply_operator_word(const std::string& word, const GrothVector& v);

/// Generalized Cartan matrix entry of affine type A_{p-1}.
int cartan_entry(int i, int j, int p);

std::vector<Partition> p_regular_partitions(int k, int p);

struct RelationReport {
  long checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  void merge(const RelationReport& o);
};

/// Chevalley and Serre relations of e_i, f_i, plus A B = Id and A, B commuting with them,
/// on every (lambda, m) with |lambda| + m <= degree_bound.
RelationReport lie_relation_check(int p, int degree_bound);

// ---------------------------------------------------------------------------
// Bicyclic monoid <a, b | ab = 1>

struct BicyclicModule {
  enum class Kind { Natural, Scalar };
  Kind kind = Kind::Natural;
  Rational lambda{1};  // scalar by which b acts on the one-dimensional module

  static BicyclicModule natural() { return {}; }
  static BicyclicModule scalar(const Rational& l);
};

/// word over {a, b} acting on basis vector `index`, rightmost letter first.
std::map<long, Rational> bicyclic_action(const BicyclicModule& mod, const std::string& word, long index);

// ---------------------------------------------------------------------------
// Characteristic zero

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

using GrothTensor2 = std::map<std::pair<GrothKey, GrothKey>, Rational>;
using GrothTensor3 = std::map<std::tuple<GrothKey, GrothKey, GrothKey>, Rational>;

GrothVector bialgebra_product(const GrothKey& x, const GrothKey& y);
GrothVector bialgebra_product(const GrothVector& x, const GrothVector& y);
GrothTensor2 bialgebra_coproduct(const GrothKey& x);
GrothTensor2 bialgebra_coproduct(const GrothVector& x);
Rational counit(const GrothKey& x);
/// Componentwise product (a (x) b)(c (x) d) = ac (x) bd.
GrothTensor2 tensor_product(const GrothTensor2& x, const GrothTensor2& y);

std::vector<GrothKey> char0_basis(int degree_bound);

struct BialgebraReport {
  RelationReport coassociativity;
  RelationReport counit;
  RelationReport multiplicativity;
  RelationReport associativity;
};

BialgebraReport bialgebra_check(int degree_bound);

/// Rook-side basis symbol (lambda, j, n) with |lambda| = j <= n.
struct RookTriple {
  Partition lambda;
  int j = 0;
  int n = 0;
  auto operator<=>(const RookTriple&) const = default;
};

GrothKey phi(const RookTriple& t);

/// Intertwining of res_i, ind_i, A, B with e_i (x) 1, f_i (x) 1, 1 (x) a, 1 (x) b (p >= 2),
/// or of product and coproduct (p = 0), over triples with n <= degree_bound.
RelationReport phi_check(int p, int degree_bound);

}  // namespace rookrep

#endif  // ROOKREP_GROTHENDIECK_HPP
