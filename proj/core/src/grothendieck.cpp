#include "rookrep/grothendieck.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace rookrep {

int degree(const GrothKey& k) { return size(k.lambda) + k.m; }

GrothVector GrothVector::basis(const Partition& lambda, int m, int p) {
  if (!is_partition(lambda) || m < 0) throw std::invalid_argument("GrothVector: bad basis symbol");
  if (p != 0 && !is_p_regular(lambda, p)) throw std::invalid_argument("GrothVector: label is not p-regular");
  GrothVector v(p);
  v.add(GrothKey{lambda, m}, Rational(1));
  return v;
}

Rational GrothVector::coeff(const GrothKey& k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? Rational{} : it->second;
}

void GrothVector::add(const GrothKey& k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GrothVector& GrothVector::operator+=(const GrothVector& o) {
  if (p_ != o.p_) throw std::invalid_argument("GrothVector: characteristic mismatch");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

GrothVector& GrothVector::operator-=(const GrothVector& o) {
  if (p_ != o.p_) throw std::invalid_argument("GrothVector: characteristic mismatch");
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

GrothVector& GrothVector::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

std::string GrothVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*(";
    for (std::size_t t = 0; t < k.lambda.size(); ++t) os << (t ? "," : "") << k.lambda[t];
    os << "):" << k.m;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Kleshchev operators

std::map<Partition, long> kleshchev_e(const Partition& lambda, int i, int p) {
  const Signature sig = signature(lambda, i, p);
  std::map<Partition, long> out;
  const long count = static_cast<long>(sig.normal.size());
  for (std::size_t t = 0; t < sig.normal.size(); ++t) {
    Partition mu = remove_box(lambda, sig.normal[t]);
    if (is_p_regular(mu, p)) out[mu] += count - static_cast<long>(t);
  }
  return out;
}

std::map<Partition, long> kleshchev_f(const Partition& lambda, int i, int p) {
  const Signature sig = signature(lambda, i, p);
  std::map<Partition, long> out;
  for (std::size_t t = 0; t < sig.conormal.size(); ++t) {
    Partition nu = add_box(lambda, sig.conormal[t]);
    if (is_p_regular(nu, p)) out[nu] += static_cast<long>(t) + 1;
  }
  return out;
}

namespace {

void require_modular(const GrothVector& v, int i) {
  if (v.p() < 2) throw std::invalid_argument("Kleshchev operators need p >= 2");
  if (i < 0 || i >= v.p()) throw std::invalid_argument("residue out of range");
  for (const auto& [k, c] : v.terms()) {
    if (!is_p_regular(k.lambda, v.p())) throw std::invalid_argument("label is not p-regular");
  }
}

GrothVector apply_on_lambda(const GrothVector& v,
                            const std::function<std::map<Partition, long>(const Partition&)>& op) {
  GrothVector out(v.p());
  for (const auto& [k, c] : v.terms()) {
    for (const auto& [mu, a] : op(k.lambda)) out.add(GrothKey{mu, k.m}, c * Rational(a));
  }
  return out;
}

}  // namespace

GrothVector kleshchev_res(int i, const GrothVector& v) {
  require_modular(v, i);
  return apply_on_lambda(v, [&](const Partition& l) { return kleshchev_e(l, i, v.p()); });
}

GrothVector kleshchev_ind(int i, const GrothVector& v) {
  require_modular(v, i);
  return apply_on_lambda(v, [&](const Partition& l) { return kleshchev_f(l, i, v.p()); });
}

GrothVector op_A(const GrothVector& v) {
  GrothVector out(v.p());
  for (const auto& [k, c] : v.terms()) {
    if (k.m > 0) out.add(GrothKey{k.lambda, k.m - 1}, c);
  }
  return out;
}

GrothVector op_B(const GrothVector& v) {
  GrothVector out(v.p());
  for (const auto& [k, c] : v.terms()) out.add(GrothKey{k.lambda, k.m + 1}, c);
  return out;
}

GrothVector apply_operator_word(const std::string& word, const GrothVector& v) {
  std::istringstream in(word);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  GrothVector out = v;
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    const std::string& t = *it;
    if (t == "A") {
      out = op_A(out);
    } else if (t == "B") {
      out = op_B(out);
    } else if (t.size() >= 2 && (t[0] == 'e' || t[0] == 'f')) {
      std::size_t used = 0;
      int i = 0;
      try {
        i = std::stoi(t.substr(1), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != t.size() - 1) throw std::invalid_argument("unknown operator '" + t + "'");
      out = t[0] == 'e' ? kleshchev_res(i, out) : kleshchev_ind(i, out);
    } else {
      throw std::invalid_argument("unknown operator '" + t + "'");
    }
  }
  return out;
}

int cartan_entry(int i, int j, int p) {
  if (i == j) return 2;
  if (p == 2) return -2;
  const long d = mod_floor(i - j, p);
  return (d == 1 || d == p - 1) ? -1 : 0;
}

std::vector<Partition> p_regular_partitions(int k, int p) {
  std::vector<Partition> out;
  for (auto& l : partitions_of(k)) {
    if (is_p_regular(l, p)) out.push_back(std::move(l));
  }
  return out;
}

void RelationReport::merge(const RelationReport& o) {
  checks += o.checks;
  violations.insert(violations.end(), o.violations.begin(), o.violations.end());
}

namespace {

using Op = std::function<GrothVector(const GrothVector&)>;

GrothVector commute(const Op& x, const Op& y, const GrothVector& v) { return x(y(v)) - y(x(v)); }

long binomial(int k, int t) {
  long b = 1;
  for (int s = 0; s < t; ++s) b = b * (k - s) / (s + 1);
  return b;
}

// ad(x)^k (y) applied to v.
GrothVector ad_power(const Op& x, const Op& y, int k, const GrothVector& v) {
  GrothVector out(v.p());
  for (int t = 0; t <= k; ++t) {
    GrothVector w = v;
    for (int s = 0; s < t; ++s) w = x(w);
    w = y(w);
    for (int s = 0; s < k - t; ++s) w = x(w);
    out += w * Rational((t % 2 == 0 ? 1 : -1) * binomial(k, t));
  }
  return out;
}

std::string describe(const GrothVector& v) { return v.to_string(); }

}  // namespace

RelationReport lie_relation_check(int p, int degree_bound) {
  if (p < 2) throw std::invalid_argument("lie_relation_check: p must be at least 2");
  RelationReport rep;
  std::vector<Op> e;
  std::vector<Op> f;
  for (int i = 0; i < p; ++i) {
    e.push_back([i](const GrothVector& v) { return kleshchev_res(i, v); });
    f.push_back([i](const GrothVector& v) { return kleshchev_ind(i, v); });
  }
  const Op A = op_A;
  const Op B = op_B;
  auto expect_zero = [&](const GrothVector& w, const std::string& what, const GrothVector& v) {
    ++rep.checks;
    if (!w.is_zero()) rep.violations.push_back(what + " on " + describe(v) + " gives " + w.to_string());
  };
  for (int d = 0; d <= degree_bound; ++d) {
    for (int k = 0; k <= d; ++k) {
      for (const auto& lambda : p_regular_partitions(k, p)) {
        const GrothVector v = GrothVector::basis(lambda, d - k, p);
        for (int i = 0; i < p; ++i) {
          const std::string si = std::to_string(i);
          for (int j = 0; j < p; ++j) {
            const std::string sj = std::to_string(j);
            if (i != j) {
              expect_zero(commute(e[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)], v),
                          "[e" + si + ",f" + sj + "]", v);
              const int kk = 1 - cartan_entry(i, j, p);
              expect_zero(ad_power(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(j)], kk, v),
                          "Serre e" + si + "," + sj, v);
              expect_zero(ad_power(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)], kk, v),
                          "Serre f" + si + "," + sj, v);
            }
          }
          const GrothVector h = commute(e[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(i)], v);
          const auto corners = removable_addable(lambda, i, p);
          const Signature sig = signature(lambda, i, p);
          const long weight = static_cast<long>(corners.addable.size()) - static_cast<long>(corners.removable.size());
          const long reduced = static_cast<long>(sig.conormal.size()) - static_cast<long>(sig.normal.size());
          ++rep.checks;
          if (!(h == v * Rational(weight)) || weight != reduced) {
            rep.violations.push_back("[e" + si + ",f" + si + "] on " + describe(v) + " gives " + h.to_string());
          }
          expect_zero(commute(A, e[static_cast<std::size_t>(i)], v), "[A,e" + si + "]", v);
          expect_zero(commute(A, f[static_cast<std::size_t>(i)], v), "[A,f" + si + "]", v);
          expect_zero(commute(B, e[static_cast<std::size_t>(i)], v), "[B,e" + si + "]", v);
          expect_zero(commute(B, f[static_cast<std::size_t>(i)], v), "[B,f" + si + "]", v);
        }
        expect_zero(A(B(v)) - v, "AB - 1", v);
        if (d == k) {
          ++rep.checks;
          if (B(A(v)) == v) rep.violations.push_back("BA acts as identity on " + describe(v));
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Bicyclic monoid

BicyclicModule BicyclicModule::scalar(const Rational& l) {
  if (l.is_zero()) throw std::invalid_argument("BicyclicModule: scalar must be nonzero");
  return BicyclicModule{Kind::Scalar, l};
}

std::map<long, Rational> bicyclic_action(const BicyclicModule& mod, const std::string& word, long index) {
  if (index < 0 || (mod.kind == BicyclicModule::Kind::Scalar && index != 0)) {
    throw std::out_of_range("bicyclic_action: basis index out of range");
  }
  std::map<long, Rational> out;
  Rational coeff(1);
  long pos = index;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const char c = *it;
    if (c == ' ') continue;
    if (c != 'a' && c != 'b') throw std::invalid_argument("bicyclic_action: letters must be a or b");
    if (mod.kind == BicyclicModule::Kind::Scalar) {
      coeff *= (c == 'b') ? mod.lambda : mod.lambda.inverse();
      continue;
    }
    if (c == 'b') {
      ++pos;
    } else if (pos == 0) {
      return out;
    } else {
      --pos;
    }
  }
  out.emplace(pos, coeff);
  return out;
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (size(lambda) != size(mu) + size(nu)) return 0;
  if (mu.size() > lambda.size()) return 0;
  auto mu_at = [&](std::size_t row) { return row < mu.size() ? mu[row] : 0; };
  for (std::size_t row = 0; row < lambda.size(); ++row) {
    if (mu_at(row) > lambda[row]) return 0;
  }
  // Reading order: rows top to bottom, each row right to left.
  std::vector<std::pair<int, int>> cells;
  for (std::size_t row = 0; row < lambda.size(); ++row) {
    for (int col = lambda[row]; col > mu_at(row); --col) cells.emplace_back(static_cast<int>(row), col);
  }
  std::map<std::pair<int, int>, int> fill;
  std::vector<int> count(nu.size() + 1, 0);
  long total = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      ++total;
      return;
    }
    const auto [row, col] = cells[k];
    int hi = static_cast<int>(nu.size());
    const auto right = fill.find({row, col + 1});
    if (right != fill.end()) hi = std::min(hi, right->second);
    int lo = 1;
    const auto above = fill.find({row - 1, col});
    if (above != fill.end()) lo = above->second + 1;
    for (int v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (count[vi] >= nu[vi - 1]) continue;
      if (v > 1 && count[vi] + 1 > count[vi - 1]) continue;
      ++count[vi];
      fill[{row, col}] = v;
      rec(k + 1);
      fill.erase({row, col});
      --count[vi];
    }
  };
  rec(0);
  return total;
}

// ---------------------------------------------------------------------------
// Bialgebra

GrothVector bialgebra_product(const GrothKey& x, const GrothKey& y) {
  GrothVector out(0);
  for (const auto& nu : partitions_of(size(x.lambda) + size(y.lambda))) {
    const long c = lr_coefficient(nu, x.lambda, y.lambda);
    if (c != 0) out.add(GrothKey{nu, x.m + y.m}, Rational(c));
  }
  return out;
}

GrothVector bialgebra_product(const GrothVector& x, const GrothVector& y) {
  GrothVector out(0);
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) out += bialgebra_product(a, b) * (ca * cb);
  }
  return out;
}

namespace {

template <class Map, class Key>
void add_to(Map& m, const Key& k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

}  // namespace

GrothTensor2 bialgebra_coproduct(const GrothKey& x) {
  GrothTensor2 out;
  const int k = size(x.lambda);
  for (int a = 0; a <= k; ++a) {
    for (const auto& mu : partitions_of(a)) {
      for (const auto& nu : partitions_of(k - a)) {
        const long c = lr_coefficient(x.lambda, mu, nu);
        if (c == 0) continue;
        for (int m1 = 0; m1 <= x.m; ++m1) add_to(out, std::make_pair(GrothKey{mu, m1}, GrothKey{nu, x.m - m1}), Rational(c));
      }
    }
  }
  return out;
}

GrothTensor2 bialgebra_coproduct(const GrothVector& x) {
  GrothTensor2 out;
  for (const auto& [k, c] : x.terms()) {
    for (const auto& [pair, d] : bialgebra_coproduct(k)) add_to(out, pair, c * d);
  }
  return out;
}

Rational counit(const GrothKey& x) { return (x.lambda.empty() && x.m == 0) ? Rational(1) : Rational{}; }

GrothTensor2 tensor_product(const GrothTensor2& x, const GrothTensor2& y) {
  GrothTensor2 out;
  for (const auto& [ab, c1] : x) {
    for (const auto& [cd, c2] : y) {
      const GrothVector left = bialgebra_product(ab.first, cd.first);
      const GrothVector right = bialgebra_product(ab.second, cd.second);
      for (const auto& [l, cl] : left.terms()) {
        for (const auto& [r, cr] : right.terms()) add_to(out, std::make_pair(l, r), c1 * c2 * cl * cr);
      }
    }
  }
  return out;
}

std::vector<GrothKey> char0_basis(int degree_bound) {
  std::vector<GrothKey> out;
  for (int d = 0; d <= degree_bound; ++d) {
    for (int k = 0; k <= d; ++k) {
      for (const auto& l : partitions_of(k)) out.push_back(GrothKey{l, d - k});
    }
  }
  return out;
}

namespace {

std::string key_string(const GrothKey& k) {
  GrothVector v(0);
  v.add(k, Rational(1));
  return v.to_string();
}

std::string tensor_string(const GrothTensor2& t) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [pair, c] : t) {
    if (!first) os << " + ";
    first = false;
    os << c << "*" << key_string(pair.first).substr(2) << "(x)" << key_string(pair.second).substr(2);
  }
  return first ? "0" : os.str();
}

}  // namespace

BialgebraReport bialgebra_check(int degree_bound) {
  BialgebraReport rep;
  const auto basis = char0_basis(degree_bound);
  const GrothKey unit{{}, 0};
  for (const auto& x : basis) {
    const GrothTensor2 dx = bialgebra_coproduct(x);
    GrothTensor3 left;
    GrothTensor3 right;
    GrothVector via_left(0);
    GrothVector via_right(0);
    for (const auto& [ab, c] : dx) {
      for (const auto& [cd, c2] : bialgebra_coproduct(ab.first)) {
        add_to(left, std::make_tuple(cd.first, cd.second, ab.second), c * c2);
      }
      for (const auto& [cd, c2] : bialgebra_coproduct(ab.second)) {
        add_to(right, std::make_tuple(ab.first, cd.first, cd.second), c * c2);
      }
      via_left.add(ab.second, c * counit(ab.first));
      via_right.add(ab.first, c * counit(ab.second));
    }
    ++rep.coassociativity.checks;
    if (left != right) rep.coassociativity.violations.push_back("coassociativity fails on " + key_string(x));
    GrothVector id(0);
    id.add(x, Rational(1));
    ++rep.counit.checks;
    if (!(via_left == id) || !(via_right == id)) rep.counit.violations.push_back("counit fails on " + key_string(x));
  }
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      if (degree(x) + degree(y) > degree_bound) continue;
      const GrothVector xy = bialgebra_product(x, y);
      const GrothTensor2 lhs = bialgebra_coproduct(xy);
      const GrothTensor2 rhs = tensor_product(bialgebra_coproduct(x), bialgebra_coproduct(y));
      ++rep.multiplicativity.checks;
      if (lhs != rhs) {
        rep.multiplicativity.violations.push_back("Delta(xy) != Delta(x)Delta(y) for x = " + key_string(x) +
                                                  ", y = " + key_string(y) + ": " + tensor_string(lhs) +
                                                  " vs " + tensor_string(rhs));
      }
      for (const auto& z : basis) {
        if (degree(x) + degree(y) + degree(z) > degree_bound) continue;
        GrothVector zv(0);
        zv.add(z, Rational(1));
        GrothVector xv(0);
        xv.add(x, Rational(1));
        ++rep.associativity.checks;
        if (!(bialgebra_product(xy, zv) == bialgebra_product(xv, bialgebra_product(y, z)))) {
          rep.associativity.violations.push_back("associativity fails");
        }
      }
    }
    ++rep.associativity.checks;
    if (!(bialgebra_product(x, unit) == bialgebra_product(unit, x))) {
      rep.associativity.violations.push_back("unit fails on " + key_string(x));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Phi

GrothKey phi(const RookTriple& t) {
  if (size(t.lambda) != t.j || t.j > t.n) throw std::invalid_argument("phi: not a valid triple");
  return GrothKey{t.lambda, t.n - t.j};
}

namespace {

using TripleVector = std::map<RookTriple, Rational>;

GrothVector phi_vector(const TripleVector& v, int p) {
  GrothVector out(p);
  for (const auto& [t, c] : v) out.add(phi(t), c);
  return out;
}

// Operators on the rook side, changing j and n directly.
TripleVector rook_res(int i, const RookTriple& t, int p) {
  TripleVector out;
  if (t.n == 0) return out;
  for (const auto& [mu, a] : kleshchev_e(t.lambda, i, p)) add_to(out, RookTriple{mu, t.j - 1, t.n - 1}, Rational(a));
  return out;
}

TripleVector rook_ind(int i, const RookTriple& t, int p) {
  TripleVector out;
  for (const auto& [nu, a] : kleshchev_f(t.lambda, i, p)) add_to(out, RookTriple{nu, t.j + 1, t.n + 1}, Rational(a));
  return out;
}

TripleVector rook_A(const RookTriple& t) {
  TripleVector out;
  if (t.j != t.n) out.emplace(RookTriple{t.lambda, t.j, t.n - 1}, Rational(1));
  return out;
}

TripleVector rook_B(const RookTriple& t) { return TripleVector{{RookTriple{t.lambda, t.j, t.n + 1}, Rational(1)}}; }

// 1 (x) a and 1 (x) b through the bicyclic module on the second factor.
GrothVector tensor_bicyclic(const GrothKey& k, const std::string& letter, int p) {
  GrothVector out(p);
  for (const auto& [pos, c] : bicyclic_action(BicyclicModule::natural(), letter, k.m)) {
    out.add(GrothKey{k.lambda, static_cast<int>(pos)}, c);
  }
  return out;
}

std::vector<RookTriple> triples(int degree_bound, int p) {
  std::vector<RookTriple> out;
  for (int n = 0; n <= degree_bound; ++n) {
    for (int j = 0; j <= n; ++j) {
      for (const auto& l : partitions_of(j)) {
        if (p == 0 || is_p_regular(l, p)) out.push_back(RookTriple{l, j, n});
      }
    }
  }
  return out;
}

std::string triple_string(const RookTriple& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < t.lambda.size(); ++k) os << (k ? "," : "") << t.lambda[k];
  os << ";" << t.j << ";" << t.n << ")";
  return os.str();
}

}  // namespace

RelationReport phi_check(int p, int degree_bound) {
  RelationReport rep;
  const auto basis = triples(degree_bound, p);
  auto compare = [&](const GrothVector& lhs, const GrothVector& rhs, const std::string& what, const RookTriple& t) {
    ++rep.checks;
    if (!(lhs == rhs)) {
      rep.violations.push_back(what + " on " + triple_string(t) + ": " + lhs.to_string() + " vs " + rhs.to_string());
    }
  };
  if (p >= 2) {
    for (const auto& t : basis) {
      const GrothVector image = GrothVector::basis(t.lambda, t.n - t.j, p);
      for (int i = 0; i < p; ++i) {
        compare(phi_vector(rook_res(i, t, p), p), kleshchev_res(i, image), "res" + std::to_string(i), t);
        compare(phi_vector(rook_ind(i, t, p), p), kleshchev_ind(i, image), "ind" + std::to_string(i), t);
      }
      const GrothKey k = phi(t);
      compare(phi_vector(rook_A(t), p), tensor_bicyclic(k, "a", p), "A vs 1(x)a", t);
      compare(phi_vector(rook_B(t), p), tensor_bicyclic(k, "b", p), "B vs 1(x)b", t);
      compare(op_A(image), tensor_bicyclic(k, "a", p), "A on (lambda, m)", t);
      compare(op_B(image), tensor_bicyclic(k, "b", p), "B on (lambda, m)", t);
    }
    return rep;
  }
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      if (x.n + y.n > degree_bound) continue;
      GrothVector prod(0);
      for (const auto& nu : partitions_of(x.j + y.j)) {
        const long c = lr_coefficient(nu, x.lambda, y.lambda);
        if (c != 0) prod.add(phi(RookTriple{nu, x.j + y.j, x.n + y.n}), Rational(c));
      }
      compare(prod, bialgebra_product(phi(x), phi(y)), "product vs " + triple_string(y), x);
    }
    // Coproduct on triples: split n = n1 + n2 and lambda by LR.
    GrothTensor2 lhs;
    for (int a = 0; a <= x.j; ++a) {
      for (const auto& mu : partitions_of(a)) {
        for (const auto& nu : partitions_of(x.j - a)) {
          const long c = lr_coefficient(x.lambda, mu, nu);
          if (c == 0) continue;
          for (int n1 = a; n1 <= x.n - (x.j - a); ++n1) {
            const RookTriple left{mu, a, n1};
            const RookTriple right{nu, x.j - a, x.n - n1};
            add_to(lhs, std::make_pair(phi(left), phi(right)), Rational(c));
          }
        }
      }
    }
    ++rep.checks;
    if (lhs != bialgebra_coproduct(phi(x))) rep.violations.push_back("coproduct on " + triple_string(x));
  }
  return rep;
}

}  // namespace rookrep
