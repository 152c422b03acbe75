#ifndef ROOKREP_JUCYSMURPHY_HPP
#define ROOKREP_JUCYSMURPHY_HPP

#include <string>
#include <vector>

#include "rookrep/matrix.hpp"
#include "rookrep/monoid.hpp"
#include "rookrep/seminormal.hpp"

namespace rookrep {

struct JmFamily {
  int n = 0;
  int r = 1;
  std::vector<AlgebraElem> X;  // X[i-1] is X_i
  std::vector<AlgebraElem> Y;
};

JmFamily jm_elements(int n, int r);

/// sum_l xi_a^l xi_b^{-l} (a,b), a and b 1-based.
AlgebraElem twisted_transposition_sum(int a, int b, int n, int r);
/// s_{j-1} Y_{j-1} s_{j-1} + (1/r) E_{j-1,j} (sum_l xi_{j-1}^l xi_j^{-l}) s_{j-1}.
AlgebraElem jm_Y_recursive(const JmFamily& jm, int j);

/// Predicted (X_i, Y_i) eigenvalue on v_L: (sgn_L(i), ct(L(i))) or zeros when i is absent.
std::pair<std::vector<CycElem>, std::vector<CycElem>> predicted_eigenvalues(const MultiTableau& L);
/// Single string key for an eigenvalue profile.
std::string eigenvalue_key(const std::vector<CycElem>& x, const std::vector<CycElem>& y);

struct SpectrumRow {
  MultiTableau L;
  std::vector<CycElem> x;
  std::vector<CycElem> y;
};

struct JmSpectrum {
  std::vector<SpectrumRow> rows;
  std::vector<std::string> violations;  // non-diagonal action or unexpected eigenvalue
};

JmSpectrum jm_spectrum(const Representation& rep, const JmFamily& jm);
JmSpectrum jm_spectrum(const Representation& rep);

/// e_k of a commuting family.
AlgebraElem elementary_symmetric(const std::vector<AlgebraElem>& xs, int k);

struct CentralityReport {
  AlgebraElem eX;
  AlgebraElem eY;
  std::vector<std::string> failures;
  bool central() const { return failures.empty(); }
};

CentralityReport central_symmetric_polys(int n, int r, int k);

struct PrimeFieldRow {
  std::string op;  // "X2", "Y3", ...
  std::vector<Rational> charpoly_q;
  std::vector<long> charpoly_p;
  bool splits = false;
  bool routes_agree = false;
};

/// Left multiplication by X_i, Y_i on the regular module of R_n (r = 1),
/// characteristic polynomials over Q and over F_p.
std::vector<PrimeFieldRow> prime_field_check(int n, long p);

/// Integer matrix of left multiplication by x on the span of all elements (r = 1).
IntMatrix regular_left_matrix(const AlgebraElem& x, const std::vector<RookElem>& elements);

}  // namespace rookrep

#endif  // ROOKREP_JUCYSMURPHY_HPP
