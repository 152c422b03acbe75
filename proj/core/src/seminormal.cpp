#include "rookrep/seminormal.hpp"

#include <algorithm>
#include <stdexcept>

#include "rookrep/jucysmurphy.hpp"

namespace rookrep {

CycMatrix act_word(const ModuleMatrices& m, const Word& w) {
  CycMatrix out = CycMatrix::identity(m.dim, m.r);
  for (const auto& letter : w) {
    switch (letter.kind) {
      case Letter::Kind::P:
        if (!m.P) throw std::invalid_argument("act_word: module has no P action");
        out = out * *m.P;
        break;
      case Letter::Kind::Q:
        if (!m.Q) throw std::invalid_argument("act_word: module has no Q action");
        out = out * *m.Q;
        break;
      case Letter::Kind::S:
        out = out * m.s.at(static_cast<std::size_t>(letter.j - 1));
        break;
    }
  }
  return out;
}

CycMatrix act_element(const ModuleMatrices& m, const RookElem& sigma) {
  if (sigma.n() != m.n || sigma.r() != m.r) throw std::invalid_argument("act_element: size mismatch");
  return act_word(m, word_for(sigma));
}

CycMatrix act_algebra(const ModuleMatrices& m, const AlgebraElem& x) {
  ElementActionCache cache(m);
  return cache.algebra(x);
}

const CycMatrix& ElementActionCache::get(const RookElem& sigma) {
  auto it = cache_.find(sigma);
  if (it == cache_.end()) it = cache_.emplace(sigma, act_element(m_, sigma)).first;
  return it->second;
}

CycMatrix ElementActionCache::algebra(const AlgebraElem& x) {
  CycMatrix out(m_.dim, m_.dim, m_.r);
  for (const auto& [sigma, c] : x.terms()) out += get(sigma) * c;
  return out;
}

std::size_t Representation::index_of(const MultiTableau& L) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), L);
  if (it == basis.end() || !(*it == L)) throw std::out_of_range("Representation: tableau not in basis");
  return static_cast<std::size_t>(it - basis.begin());
}

namespace {

CycElem one(int r) { return CycElem(r, Rational(1)); }

// Column k of s_j when j and j+1 both lie in L.
void group_swap_column(const Representation& rep, CycMatrix& s, std::size_t k, int j) {
  const MultiTableau& L = rep.basis[k];
  const auto swapped = swap_tableau(L, j);
  if (L.cell(j)->component != L.cell(j + 1)->component) {
    s(rep.index_of(*swapped), k) = one(rep.r);
    return;
  }
  const Rational a = swap_coefficient(L, j);
  s(k, k) = CycElem(rep.r, a);
  if (swapped) s(rep.index_of(*swapped), k) = CycElem(rep.r, Rational(1) + a);
}

CycMatrix q_matrix(const Representation& rep) {
  CycMatrix q(rep.basis.size(), rep.basis.size(), rep.r);
  for (std::size_t k = 0; k < rep.basis.size(); ++k) {
    const auto& c = rep.basis[k].cell(1);
    q(k, k) = c ? cyc_root_power(rep.r, c->component) : one(rep.r);
  }
  return q;
}

Representation base_representation(const Multipartition& lambda, int n) {
  if (lambda.empty()) throw std::invalid_argument("representation: empty multipartition");
  Representation rep;
  rep.label = lambda;
  rep.n = n;
  rep.r = static_cast<int>(lambda.size());
  rep.basis = enumerate_tableaux(lambda, n);
  rep.mats.n = n;
  rep.mats.r = rep.r;
  rep.mats.dim = rep.basis.size();
  return rep;
}

}  // namespace

Representation symgroup_irrep(const Multipartition& lambda) {
  Representation rep = base_representation(lambda, size(lambda));
  const std::size_t d = rep.basis.size();
  for (int j = 1; j < rep.n; ++j) {
    CycMatrix s(d, d, rep.r);
    for (std::size_t k = 0; k < d; ++k) group_swap_column(rep, s, k, j);
    rep.mats.s.push_back(std::move(s));
  }
  if (rep.n >= 1) rep.mats.Q = q_matrix(rep);
  return rep;
}

Representation rook_irrep(const Multipartition& lambda, int n) {
  if (size(lambda) > n) throw std::invalid_argument("rook_irrep: |lambda| exceeds n");
  Representation rep = base_representation(lambda, n);
  const std::size_t d = rep.basis.size();
  for (int j = 1; j < n; ++j) {
    CycMatrix s(d, d, rep.r);
    for (std::size_t k = 0; k < d; ++k) {
      const MultiTableau& L = rep.basis[k];
      const bool a = L.contains(j);
      const bool b = L.contains(j + 1);
      if (a && b) {
        group_swap_column(rep, s, k, j);
      } else if (a || b) {
        s(rep.index_of(*swap_tableau(L, j)), k) = one(rep.r);
      } else {
        s(k, k) = one(rep.r);
      }
    }
    rep.mats.s.push_back(std::move(s));
  }
  if (n >= 1) {
    CycMatrix p(d, d, rep.r);
    for (std::size_t k = 0; k < d; ++k) {
      if (!rep.basis[k].contains(1)) p(k, k) = one(rep.r);
    }
    rep.mats.P = std::move(p);
    rep.mats.Q = q_matrix(rep);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Oracle

InducedOracle::InducedOracle(const Multipartition& lambda, int n)
    : lambda_(lambda),
      n_(n),
      r_(static_cast<int>(lambda.size())),
      basis_(enumerate_tableaux(lambda, n)),
      group_(symgroup_irrep(lambda)) {}

CycMatrix InducedOracle::act_on(const RookElem& sigma, std::size_t k) const {
  if (sigma.n() != n_ || sigma.r() != r_) throw std::invalid_argument("InducedOracle: size mismatch");
  CycMatrix out(basis_.size(), 1, r_);
  const MultiTableau& L = basis_.at(k);
  const std::vector<int> Z = L.entries();
  std::vector<int> image;
  for (int z : Z) {
    const int row = sigma.row_of(z - 1);
    if (row < 0) return out;
    image.push_back(row);
  }
  std::vector<int> Zp = image;
  std::sort(Zp.begin(), Zp.end());
  const int i = static_cast<int>(Z.size());
  std::vector<int> rows(static_cast<std::size_t>(i));
  std::vector<int> labels(static_cast<std::size_t>(i));
  for (int l = 0; l < i; ++l) {
    const auto pos = std::lower_bound(Zp.begin(), Zp.end(), image[static_cast<std::size_t>(l)]) - Zp.begin();
    rows[static_cast<std::size_t>(l)] = static_cast<int>(pos);
    labels[static_cast<std::size_t>(l)] = sigma.label_of(Z[static_cast<std::size_t>(l)] - 1);
  }
  const RookElem pi(i, r_, std::move(rows), std::move(labels));
  const CycMatrix rho = act_element(group_.mats, pi);
  const std::size_t w = group_.index_of(L.standardized());
  for (std::size_t t = 0; t < group_.basis.size(); ++t) {
    const CycElem& c = rho(t, w);
    if (c.is_zero()) continue;
    const MultiTableau& Mstd = group_.basis[t];
    MultiTableau M(n_, r_);
    for (int m = 1; m <= i; ++m) M.place(Zp[static_cast<std::size_t>(m - 1)] + 1, Mstd.cell(m));
    const auto it = std::lower_bound(basis_.begin(), basis_.end(), M);
    out(static_cast<std::size_t>(it - basis_.begin()), 0) += c;
  }
  return out;
}

CycMatrix InducedOracle::matrix(const RookElem& sigma) const {
  CycMatrix out(basis_.size(), basis_.size(), r_);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const CycMatrix col = act_on(sigma, k);
    for (std::size_t t = 0; t < basis_.size(); ++t) out(t, k) = col(t, 0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gelfand model

bool swaps_adjacent(const RookElem& M, int i) {
  return M.row_of(i - 1) == i && M.row_of(i) == i - 1;
}

GelfandModel gelfand_model(int n, int r) {
  GelfandModel g;
  g.n = n;
  g.r = r;
  for (const auto& sigma : enumerate_elements(n, r)) {
    if (sigma == sigma.transpose()) g.basis.push_back(sigma);
  }
  const std::size_t d = g.basis.size();
  std::map<RookElem, std::size_t> index;
  for (std::size_t k = 0; k < d; ++k) index.emplace(g.basis[k], k);
  g.mats.n = n;
  g.mats.r = r;
  g.mats.dim = d;
  const CycElem one_r = one(r);
  for (int i = 1; i < n; ++i) {
    const RookElem s = gen_s(n, r, i);
    CycMatrix m(d, d, r);
    for (std::size_t k = 0; k < d; ++k) {
      const RookElem& M = g.basis[k];
      m(index.at(s * M * s), k) = swaps_adjacent(M, i) ? -one_r : one_r;
    }
    g.mats.s.push_back(std::move(m));
  }
  if (n >= 1) {
    const RookElem Q = gen_Q(n, r);
    const RookElem Qt = Q.transpose();
    CycMatrix q(d, d, r);
    CycMatrix p(d, d, r);
    for (std::size_t k = 0; k < d; ++k) {
      const RookElem& M = g.basis[k];
      q(index.at(Q * M * Qt), k) = one_r;
      const auto img = M.image();
      if (img.empty() || img.front() != 0) p(k, k) = one_r;
    }
    g.mats.Q = std::move(q);
    g.mats.P = std::move(p);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Module plumbing

namespace {

CycMatrix block_diag(const CycMatrix& a, const CycMatrix& b) {
  CycMatrix out(a.rows() + b.rows(), a.cols() + b.cols(), a.order());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return out;
}

}  // namespace

ModuleMatrices direct_sum(const ModuleMatrices& a, const ModuleMatrices& b) {
  if (a.n != b.n || a.r != b.r) throw std::invalid_argument("direct_sum: modules for different monoids");
  ModuleMatrices out;
  out.n = a.n;
  out.r = a.r;
  out.dim = a.dim + b.dim;
  if (a.P && b.P) out.P = block_diag(*a.P, *b.P);
  if (a.Q && b.Q) out.Q = block_diag(*a.Q, *b.Q);
  for (std::size_t j = 0; j < a.s.size(); ++j) out.s.push_back(block_diag(a.s[j], b.s[j]));
  return out;
}

ModuleMatrices restrict_module(const ModuleMatrices& m) {
  if (m.n < 1) throw std::invalid_argument("restrict_module: nothing to restrict");
  ModuleMatrices out = m;
  out.n = m.n - 1;
  if (!out.s.empty()) out.s.pop_back();
  if (out.n == 0) {
    out.P.reset();
    out.Q.reset();
  }
  return out;
}

std::map<Multipartition, int> decompose_by_spectrum(const ModuleMatrices& m) {
  std::map<Multipartition, int> result;
  const int n = m.n;
  const int r = m.r;
  if (n == 0) {
    if (m.dim > 0) result[Multipartition(static_cast<std::size_t>(r))] = static_cast<int>(m.dim);
    return result;
  }
  const JmFamily jm = jm_elements(n, r);
  ElementActionCache cache(m);
  std::vector<CycMatrix> ops;
  for (const auto& x : jm.X) ops.push_back(cache.algebra(x));
  for (const auto& y : jm.Y) ops.push_back(cache.algebra(y));

  std::vector<CycElem> x_candidates{CycElem(r)};
  for (int k = 0; k < r; ++k) x_candidates.push_back(cyc_root_power(r, k));
  std::vector<CycElem> y_candidates{CycElem(r)};
  for (int c = -n; c <= n; ++c) {
    if (c != 0) y_candidates.push_back(CycElem(r, Rational(c)));
  }

  struct Piece {
    std::vector<CycElem> values;
    CycMatrix basis;
  };
  std::vector<Piece> pieces{Piece{{}, CycMatrix::identity(m.dim, r)}};
  for (std::size_t t = 0; t < ops.size(); ++t) {
    const auto& cands = t < static_cast<std::size_t>(n) ? x_candidates : y_candidates;
    std::vector<Piece> next;
    for (const auto& piece : pieces) {
      const CycMatrix image = ops[t] * piece.basis;
      std::size_t found = 0;
      for (const auto& c : cands) {
        const CycMatrix kernel = null_space(image - piece.basis * c);
        if (kernel.cols() == 0) continue;
        found += kernel.cols();
        Piece child{piece.values, piece.basis * kernel};
        child.values.push_back(c);
        next.push_back(std::move(child));
      }
      if (found != piece.basis.cols()) {
        throw SpectrumInconsistency("Jucys-Murphy operator is not diagonalizable with admissible eigenvalues");
      }
    }
    pieces = std::move(next);
  }

  std::map<std::string, std::pair<Multipartition, std::size_t>> lookup;
  std::map<Multipartition, std::vector<MultiTableau>> tableaux;
  for (const auto& [level, lambda] : multipartitions_up_to(r, n)) {
    auto& list = tableaux[lambda];
    list = enumerate_tableaux(lambda, n);
    for (std::size_t k = 0; k < list.size(); ++k) {
      const auto [x, y] = predicted_eigenvalues(list[k]);
      lookup.emplace(eigenvalue_key(x, y), std::make_pair(lambda, k));
    }
  }
  std::map<Multipartition, std::map<std::size_t, std::size_t>> dims;
  for (const auto& piece : pieces) {
    const std::vector<CycElem> x(piece.values.begin(), piece.values.begin() + n);
    const std::vector<CycElem> y(piece.values.begin() + n, piece.values.end());
    const auto it = lookup.find(eigenvalue_key(x, y));
    if (it == lookup.end()) {
      throw SpectrumInconsistency("joint eigenvalue string matches no tableau: " + eigenvalue_key(x, y));
    }
    dims[it->second.first][it->second.second] += piece.basis.cols();
  }
  for (const auto& [lambda, per_tableau] : dims) {
    const std::size_t expected = tableaux[lambda].size();
    const std::size_t d = per_tableau.begin()->second;
    if (per_tableau.size() != expected) {
      throw SpectrumInconsistency("incomplete Gelfand-Zeitlin family for a label");
    }
    for (const auto& [k, dk] : per_tableau) {
      if (dk != d) throw SpectrumInconsistency("unequal eigenspace dimensions within a label");
    }
    result[lambda] = static_cast<int>(d);
  }
  return result;
}

}  // namespace rookrep
