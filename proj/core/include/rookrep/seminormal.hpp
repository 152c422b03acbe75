#ifndef ROOKREP_SEMINORMAL_HPP
#define ROOKREP_SEMINORMAL_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rookrep/combinatorics.hpp"
#include "rookrep/matrix.hpp"
#include "rookrep/monoid.hpp"

namespace rookrep {

/// Matrices of the generators on some module. P is absent for group modules.
struct ModuleMatrices {
  int n = 0;
  int r = 1;
  std::size_t dim = 0;
  std::optional<CycMatrix> P;
  std::optional<CycMatrix> Q;  // absent only when n == 0
  std::vector<CycMatrix> s;    // s[j-1] for s_j
};

CycMatrix act_word(const ModuleMatrices& m, const Word& w);
CycMatrix act_element(const ModuleMatrices& m, const RookElem& sigma);
CycMatrix act_algebra(const ModuleMatrices& m, const AlgebraElem& x);

/// Memoizes act_element per monoid element.
class ElementActionCache {
public:
  explicit ElementActionCache(const ModuleMatrices& m) : m_(m) {}
  const CycMatrix& get(const RookElem& sigma);
  CycMatrix algebra(const AlgebraElem& x);

private:
  const ModuleMatrices& m_;
  std::map<RookElem, CycMatrix> cache_;
};

struct Representation {
  Multipartition label;
  int n = 0;
  int r = 1;
  std::vector<MultiTableau> basis;
  ModuleMatrices mats;

  std::size_t index_of(const MultiTableau& L) const;
};

/// Irreducible module of C_r wr S_n indexed by lambda, |lambda| = n.
Representation symgroup_irrep(const Multipartition& lambda);
/// Irreducible module of C_r wr R_n indexed by lambda, |lambda| <= n.
Representation rook_irrep(const Multipartition& lambda, int n);

/// Action of arbitrary elements on rook_irrep(lambda, n) through h_Z (x) w_L' and the
/// group module, independent of the closed-form generator matrices.
class InducedOracle {
public:
  InducedOracle(const Multipartition& lambda, int n);

  /// sigma applied to basis vector k of rook_irrep(lambda, n).
  CycMatrix act_on(const RookElem& sigma, std::size_t k) const;
  CycMatrix matrix(const RookElem& sigma) const;
  const std::vector<MultiTableau>& basis() const { return basis_; }

private:
  Multipartition lambda_;
  int n_;
  int r_;
  std::vector<MultiTableau> basis_;
  Representation group_;
};

struct GelfandModel {
  int n = 0;
  int r = 1;
  std::vector<RookElem> basis;  // symmetric elements
  ModuleMatrices mats;
};

/// (i, i+1) is a 2-cycle of the symmetric element M.
bool swaps_adjacent(const RookElem& M, int i);
GelfandModel gelfand_model(int n, int r);

/// Direct sum of modules on the same monoid.
ModuleMatrices direct_sum(const ModuleMatrices& a, const ModuleMatrices& b);
/// Restriction to C_r wr R_{n-1} (drops s_{n-1}).
ModuleMatrices restrict_module(const ModuleMatrices& m);

struct SpectrumInconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Multiplicities of irreducibles via joint eigenspaces of the Jucys-Murphy operators.
std::map<Multipartition, int> decompose_by_spectrum(const ModuleMatrices& m);

}  // namespace rookrep

#endif  // ROOKREP_SEMINORMAL_HPP
