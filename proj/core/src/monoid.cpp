#include "rookrep/monoid.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace rookrep {

RookElem::RookElem(int n, int r)
    : n_(n), r_(r), rows_(static_cast<std::size_t>(n), -1), labels_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || r < 1) throw std::invalid_argument("RookElem: need n >= 0 and r >= 1");
}

RookElem::RookElem(int n, int r, std::vector<int> rows, std::vector<int> labels)
    : n_(n), r_(r), rows_(std::move(rows)), labels_(std::move(labels)) {
  if (n < 0 || r < 1) throw std::invalid_argument("RookElem: need n >= 0 and r >= 1");
  if (rows_.size() != static_cast<std::size_t>(n) || labels_.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("RookElem: rows and labels must have length n");
  }
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    if (rows_[j] < 0) {
      rows_[j] = -1;
      labels_[j] = 0;
      continue;
    }
    if (rows_[j] >= n) throw std::invalid_argument("RookElem: row out of range");
    if (used[static_cast<std::size_t>(rows_[j])]) throw std::invalid_argument("RookElem: row used twice");
    used[static_cast<std::size_t>(rows_[j])] = true;
    labels_[j] = static_cast<int>(mod_floor(labels_[j], r));
  }
}

RookElem RookElem::identity(int n, int r) {
  std::vector<int> rows(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(j)] = j;
  return RookElem(n, r, std::move(rows), std::vector<int>(static_cast<std::size_t>(n), 0));
}

int RookElem::rank() const {
  return static_cast<int>(std::count_if(rows_.begin(), rows_.end(), [](int x) { return x >= 0; }));
}

std::vector<int> RookElem::domain() const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j) {
    if (row_of(j) >= 0) out.push_back(j);
  }
  return out;
}

std::vector<int> RookElem::image() const {
  std::vector<int> out;
  for (int x : rows_) {
    if (x >= 0) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RookElem RookElem::transpose() const {
  std::vector<int> rows(static_cast<std::size_t>(n_), -1);
  std::vector<int> labels(static_cast<std::size_t>(n_), 0);
  for (int j = 0; j < n_; ++j) {
    const int i = row_of(j);
    if (i < 0) continue;
    rows[static_cast<std::size_t>(i)] = j;
    labels[static_cast<std::size_t>(i)] = label_of(j);
  }
  return RookElem(n_, r_, std::move(rows), std::move(labels));
}

RookElem RookElem::inverse() const {
  RookElem t = transpose();
  for (auto& l : t.labels_) l = static_cast<int>(mod_floor(-l, r_));
  return t;
}

std::string RookElem::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int j = 0; j < n_; ++j) {
    if (j > 0) os << " ";
    if (row_of(j) < 0) {
      os << ".";
    } else {
      os << row_of(j) + 1;
      if (r_ > 1) os << "^" << label_of(j);
    }
  }
  os << "]";
  return os.str();
}

bool operator<(const RookElem& a, const RookElem& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.r_ != b.r_) return a.r_ < b.r_;
  const int ra = a.rank();
  const int rb = b.rank();
  if (ra != rb) return ra < rb;
  const auto da = a.domain();
  const auto db = b.domain();
  if (da != db) return da < db;
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  return a.labels_ < b.labels_;
}

RookElem compose(const RookElem& sigma, const RookElem& tau) {
  if (sigma.n() != tau.n() || sigma.r() != tau.r()) {
    throw std::invalid_argument("compose: size or order mismatch");
  }
  const int n = sigma.n();
  std::vector<int> rows(static_cast<std::size_t>(n), -1);
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    const int mid = tau.row_of(j);
    if (mid < 0) continue;
    const int out = sigma.row_of(mid);
    if (out < 0) continue;
    rows[static_cast<std::size_t>(j)] = out;
    labels[static_cast<std::size_t>(j)] = tau.label_of(j) + sigma.label_of(mid);
  }
  return RookElem(n, sigma.r(), std::move(rows), std::move(labels));
}

RookElem gen_P(int n, int r) {
  if (n < 1) throw std::invalid_argument("gen_P: n must be positive");
  return diagonal_idempotent(n, r, {1});
}

RookElem gen_Q(int n, int r) {
  if (n < 1) throw std::invalid_argument("gen_Q: n must be positive");
  return diagonal_root(n, r, 1, 1);
}

RookElem transposition(int n, int r, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n) throw std::out_of_range("transposition: index out of range");
  RookElem id = RookElem::identity(n, r);
  std::vector<int> rows = id.rows();
  std::swap(rows[static_cast<std::size_t>(a - 1)], rows[static_cast<std::size_t>(b - 1)]);
  return RookElem(n, r, std::move(rows), id.labels());
}

RookElem gen_s(int n, int r, int j) {
  if (j < 1 || j >= n) throw std::out_of_range("gen_s: index out of range");
  return transposition(n, r, j, j + 1);
}

Generators generators(int n, int r) {
  Generators g{gen_P(n, r), gen_Q(n, r), {}};
  for (int j = 1; j < n; ++j) g.s.push_back(gen_s(n, r, j));
  return g;
}

RookElem diagonal_idempotent(int n, int r, const std::vector<int>& B) {
  RookElem id = RookElem::identity(n, r);
  std::vector<int> rows = id.rows();
  for (int b : B) {
    if (b < 1 || b > n) throw std::out_of_range("diagonal_idempotent: index out of range");
    rows[static_cast<std::size_t>(b - 1)] = -1;
  }
  return RookElem(n, r, std::move(rows), id.labels());
}

RookElem diagonal_root(int n, int r, int k, int label) {
  if (k < 1 || k > n) throw std::out_of_range("diagonal_root: index out of range");
  RookElem id = RookElem::identity(n, r);
  std::vector<int> labels = id.labels();
  labels[static_cast<std::size_t>(k - 1)] = label;
  return RookElem(n, r, id.rows(), std::move(labels));
}

long monoid_order(int n, int r) {
  long total = 0;
  for (int k = 0; k <= n; ++k) {
    long binom = 1;
    for (int t = 0; t < k; ++t) binom = binom * (n - t) / (t + 1);
    long fact = 1;
    for (int t = 2; t <= k; ++t) fact *= t;
    long rk = 1;
    for (int t = 0; t < k; ++t) rk *= r;
    total += binom * binom * fact * rk;
  }
  return total;
}

std::vector<RookElem> enumerate_elements(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("enumerate_elements: need n >= 0 and r >= 1");
  if (n > 8 || monoid_order(n, r) > kMaxEnumeratedElements) {
    throw std::invalid_argument("enumerate_elements: monoid too large to enumerate");
  }
  std::vector<RookElem> out;
  std::vector<int> rows(static_cast<std::size_t>(n), -1);
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      out.emplace_back(n, r, rows, labels);
      return;
    }
    rows[static_cast<std::size_t>(j)] = -1;
    labels[static_cast<std::size_t>(j)] = 0;
    rec(j + 1);
    for (int i = 0; i < n; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      used[static_cast<std::size_t>(i)] = true;
      rows[static_cast<std::size_t>(j)] = i;
      for (int l = 0; l < r; ++l) {
        labels[static_cast<std::size_t>(j)] = l;
        rec(j + 1);
      }
      used[static_cast<std::size_t>(i)] = false;
    }
    rows[static_cast<std::size_t>(j)] = -1;
    labels[static_cast<std::size_t>(j)] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Partition> cycle_type(const RookElem& sigma) {
  if (sigma.r() != 1) throw std::invalid_argument("cycle_type: only defined for r = 1");
  if (sigma.domain() != sigma.image()) return std::nullopt;
  Partition out;
  std::vector<bool> seen(static_cast<std::size_t>(sigma.n()), false);
  for (int j : sigma.domain()) {
    if (seen[static_cast<std::size_t>(j)]) continue;
    int len = 0;
    for (int x = j; !seen[static_cast<std::size_t>(x)]; x = sigma.row_of(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

RookElem lcell_element(const std::vector<int>& Z, int n, int r) {
  std::vector<int> rows(static_cast<std::size_t>(n), -1);
  for (std::size_t l = 0; l < Z.size(); ++l) rows.at(l) = Z[l];
  return RookElem(n, r, std::move(rows), std::vector<int>(static_cast<std::size_t>(n), 0));
}

std::vector<RookElem> lcell_basis(int i, int n, int r) {
  if (i < 0 || i > n) throw std::out_of_range("lcell_basis: rank out of range");
  std::vector<RookElem> out;
  std::vector<int> Z;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(Z.size()) == i) {
      out.push_back(lcell_element(Z, n, r));
      return;
    }
    for (int x = start; x < n; ++x) {
      Z.push_back(x);
      rec(x + 1);
      Z.pop_back();
    }
  };
  rec(0);
  return out;
}

bool in_lcell(const RookElem& sigma, int i) {
  if (sigma.rank() != i) return false;
  for (int j = i; j < sigma.n(); ++j) {
    if (sigma.row_of(j) >= 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// AlgebraElem

AlgebraElem::AlgebraElem(const RookElem& sigma) : n_(sigma.n()), r_(sigma.r()) {
  terms_.emplace(sigma, CycElem(r_, Rational(1)));
}

void AlgebraElem::check(const AlgebraElem& o) const {
  if (n_ != o.n_ || r_ != o.r_) throw std::invalid_argument("AlgebraElem: size or order mismatch");
}

void AlgebraElem::add_term(const RookElem& sigma, const CycElem& coeff) {
  if (sigma.n() != n_ || sigma.r() != r_) throw std::invalid_argument("AlgebraElem: term mismatch");
  if (coeff.is_zero()) return;
  auto it = terms_.find(sigma);
  if (it == terms_.end()) {
    terms_.emplace(sigma, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElem& AlgebraElem::operator+=(const AlgebraElem& o) {
  check(o);
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

AlgebraElem& AlgebraElem::operator-=(const AlgebraElem& o) {
  check(o);
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

AlgebraElem& AlgebraElem::operator*=(const CycElem& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [sigma, c] : terms_) c *= s;
  return *this;
}

AlgebraElem operator*(const AlgebraElem& a, const AlgebraElem& b) {
  a.check(b);
  AlgebraElem out(a.n_, a.r_);
  for (const auto& [sa, ca] : a.terms_) {
    for (const auto& [sb, cb] : b.terms_) out.add_term(compose(sa, sb), ca * cb);
  }
  return out;
}

std::string AlgebraElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c << ")" << s.to_string();
    first = false;
  }
  return os.str();
}

AlgebraElem commutator(const AlgebraElem& a, const AlgebraElem& b) { return a * b - b * a; }

AlgebraElem idempotent_E(const std::vector<int>& A, int n, int r) {
  AlgebraElem out(n, r);
  const std::size_t k = A.size();
  for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
    std::vector<int> B;
    for (std::size_t t = 0; t < k; ++t) {
      if (mask & (1UL << t)) B.push_back(A[t]);
    }
    const long sign = (B.size() % 2 == 0) ? 1 : -1;
    out.add_term(diagonal_idempotent(n, r, B), CycElem(r, Rational(sign)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Words

std::string word_to_string(const Word& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) os << " ";
    switch (w[k].kind) {
      case Letter::Kind::P: os << "P"; break;
      case Letter::Kind::Q: os << "Q"; break;
      case Letter::Kind::S: os << "s" << w[k].j; break;
    }
  }
  return os.str();
}

RookElem evaluate_word(const Word& w, int n, int r) {
  RookElem out = RookElem::identity(n, r);
  for (const auto& letter : w) {
    switch (letter.kind) {
      case Letter::Kind::P: out = out * gen_P(n, r); break;
      case Letter::Kind::Q: out = out * gen_Q(n, r); break;
      case Letter::Kind::S: out = out * gen_s(n, r, letter.j); break;
    }
  }
  return out;
}

namespace {

Letter S(int j) { return Letter{Letter::Kind::S, j}; }

// s_{k-1} ... s_1 X s_1 ... s_{k-1}
void append_conjugated(Word& w, int k, const Word& middle) {
  for (int j = k - 1; j >= 1; --j) w.push_back(S(j));
  w.insert(w.end(), middle.begin(), middle.end());
  for (int j = 1; j <= k - 1; ++j) w.push_back(S(j));
}

}  // namespace

Word group_factorize(const RookElem& pi) {
  const int n = pi.n();
  if (pi.rank() != n) throw std::invalid_argument("group_factorize: element is not invertible");
  std::vector<int> rho = pi.rows();
  std::vector<int> found;
  for (bool again = true; again;) {
    again = false;
    for (int j = 0; j + 1 < n; ++j) {
      if (rho[static_cast<std::size_t>(j)] > rho[static_cast<std::size_t>(j + 1)]) {
        std::swap(rho[static_cast<std::size_t>(j)], rho[static_cast<std::size_t>(j + 1)]);
        found.push_back(j + 1);
        again = true;
      }
    }
  }
  Word w;
  for (auto it = found.rbegin(); it != found.rend(); ++it) w.push_back(S(*it));
  for (int k = 1; k <= n; ++k) {
    const int a = pi.label_of(k - 1);
    if (a == 0) continue;
    append_conjugated(w, k, Word(static_cast<std::size_t>(a), Letter{Letter::Kind::Q, 0}));
  }
  return w;
}

Word word_for(const RookElem& sigma) {
  const int n = sigma.n();
  std::vector<int> rows = sigma.rows();
  std::vector<int> labels = sigma.labels();
  const auto img = sigma.image();
  std::vector<int> free_rows;
  for (int i = 0; i < n; ++i) {
    if (!std::binary_search(img.begin(), img.end(), i)) free_rows.push_back(i);
  }
  std::vector<int> missing;
  std::size_t next = 0;
  for (int j = 0; j < n; ++j) {
    if (rows[static_cast<std::size_t>(j)] < 0) {
      rows[static_cast<std::size_t>(j)] = free_rows[next++];
      missing.push_back(j + 1);
    }
  }
  Word w = group_factorize(RookElem(n, sigma.r(), std::move(rows), std::move(labels)));
  for (int b : missing) append_conjugated(w, b, Word{Letter{Letter::Kind::P, 0}});
  return w;
}

}  // namespace rookrep
