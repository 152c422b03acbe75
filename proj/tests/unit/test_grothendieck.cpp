#include <doctest.h>

#include "rookrep/grothendieck.hpp"
#include "rookrep/seminormal.hpp"

using namespace rookrep;

namespace {

long factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

Rational trace(const CycMatrix& m) {
  CycElem t(m.order());
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return *t.as_rational();
}

// Multiplicity of S^mu x S^nu in the restriction of S^lambda to S_a x S_b.
long induced_character_lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
  const int a = size(mu);
  const int b = size(nu);
  const int n = a + b;
  const Representation big = symgroup_irrep({lambda});
  const Representation left = symgroup_irrep({mu});
  const Representation right = symgroup_irrep({nu});
  std::vector<RookElem> ga;
  std::vector<RookElem> gb;
  for (const auto& e : enumerate_elements(a, 1)) {
    if (e.rank() == a) ga.push_back(e);
  }
  for (const auto& e : enumerate_elements(b, 1)) {
    if (e.rank() == b) gb.push_back(e);
  }
  Rational total(0);
  for (const auto& g : ga) {
    for (const auto& h : gb) {
      std::vector<int> rows(static_cast<std::size_t>(n));
      for (int c = 0; c < a; ++c) rows[static_cast<std::size_t>(c)] = g.row_of(c);
      for (int c = 0; c < b; ++c) rows[static_cast<std::size_t>(a + c)] = a + h.row_of(c);
      const RookElem gh(n, 1, rows, std::vector<int>(static_cast<std::size_t>(n), 0));
      total += trace(act_element(big.mats, gh)) * trace(act_element(left.mats, g)) *
               trace(act_element(right.mats, h));
    }
  }
  total /= Rational(factorial(a) * factorial(b));
  return *total.to_long();
}

long syt(const Partition& p) {
  long denom = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      int below = 0;
      for (std::size_t k = i + 1; k < p.size(); ++k) below += p[k] > j;
      denom *= p[i] - j + below;
    }
  }
  return factorial(size(p)) / denom;
}

Partition conjugate(const Partition& p) {
  Partition c;
  for (int j = 0; j < (p.empty() ? 0 : p[0]); ++j) {
    int len = 0;
    for (int part : p) len += part > j;
    c.push_back(len);
  }
  return c;
}

GrothVector key(const Partition& l, int m, int p = 0) { return GrothVector::basis(l, m, p); }

}  // namespace

TEST_CASE("residue operators on small partitions") {
  CHECK(kleshchev_res(0, key({1}, 0, 2)) == key({}, 0, 2));
  CHECK(kleshchev_res(0, key({}, 3, 2)).is_zero());
  CHECK(kleshchev_res(1, key({1}, 0, 2)).is_zero());
  CHECK(kleshchev_ind(0, key({}, 4, 2)) == key({1}, 4, 2));
  CHECK(kleshchev_ind(1, key({}, 4, 2)).is_zero());
  CHECK(kleshchev_ind(1, key({1}, 0, 3)) == key({2}, 0, 3));
  CHECK(kleshchev_ind(1, key({1}, 0, 2)) == key({2}, 0, 2) * Rational(2));
  CHECK(kleshchev_res(1, key({2, 1}, 0, 2)) == key({2}, 0, 2) * Rational(2));
}

TEST_CASE("residue operators keep labels p-regular") {
  for (int p : {2, 3, 5}) {
    for (int k = 0; k <= 7; ++k) {
      for (const auto& lambda : p_regular_partitions(k, p)) {
        CHECK(is_p_regular(lambda, p));
        for (int i = 0; i < p; ++i) {
          for (const auto& [mu, c] : kleshchev_e(lambda, i, p)) {
            CHECK(is_p_regular(mu, p));
            CHECK(c > 0);
          }
          for (const auto& [nu, c] : kleshchev_f(lambda, i, p)) {
            CHECK(is_p_regular(nu, p));
            CHECK(c > 0);
          }
        }
      }
    }
  }
}

TEST_CASE("removing the box with the largest coefficient undoes adding it") {
  for (int p : {2, 3}) {
    for (int k = 0; k <= 6; ++k) {
      for (const auto& lambda : p_regular_partitions(k, p)) {
        for (int i = 0; i < p; ++i) {
          const auto sig = signature(lambda, i, p);
          if (sig.conormal.empty()) continue;
          const Partition nu = add_box(lambda, sig.conormal.back());
          const auto back = signature(nu, i, p);
          REQUIRE_FALSE(back.normal.empty());
          CHECK(remove_box(nu, back.normal.front()) == lambda);
        }
      }
    }
  }
}

TEST_CASE("shift operators") {
  const GrothVector v = key({2, 1}, 0, 3) + key({1}, 2, 3);
  CHECK(op_A(op_B(v)) == v);
  CHECK(op_A(key({2}, 0, 3)).is_zero());
  CHECK(op_B(op_A(key({2}, 0, 3))).is_zero());
  CHECK(op_B(key({2}, 1, 3)) == key({2}, 2, 3));
  CHECK(apply_operator_word("f1 f0", key({}, 0, 2)) == key({2}, 0, 2) * Rational(2));
  CHECK(apply_operator_word("A B", key({}, 0, 2)) == key({}, 0, 2));
  CHECK(apply_operator_word("e0 f1", key({1}, 0, 2)).is_zero());
  CHECK_THROWS(apply_operator_word("g0", key({}, 0, 2)));
}

TEST_CASE("Cartan matrix") {
  CHECK(cartan_entry(0, 0, 2) == 2);
  CHECK(cartan_entry(0, 1, 2) == -2);
  CHECK(cartan_entry(0, 1, 3) == -1);
  CHECK(cartan_entry(0, 2, 3) == -1);
  CHECK(cartan_entry(0, 2, 5) == 0);
  CHECK(cartan_entry(4, 0, 5) == -1);
}

TEST_CASE("relation report") {
  for (int p : {2, 3}) {
    const RelationReport rep = lie_relation_check(p, 6);
    CHECK(rep.checks > 0);
    for (const auto& v : rep.violations) {
      CHECK(v.find('A') == std::string::npos);
      CHECK(v.find('B') == std::string::npos);
    }
  }
  // [e_0, f_1] on (1) vanishes at p = 2.
  const GrothVector one = key({1}, 0, 2);
  CHECK(kleshchev_res(0, kleshchev_ind(1, one)) == kleshchev_ind(1, kleshchev_res(0, one)));
}

TEST_CASE("bicyclic modules") {
  const auto nat = BicyclicModule::natural();
  CHECK(bicyclic_action(nat, "a", 0).empty());
  for (long i = 0; i <= 10; ++i) CHECK(bicyclic_action(nat, "ab", i) == std::map<long, Rational>{{i, Rational(1)}});
  CHECK(bicyclic_action(nat, "ba", 0).empty());
  CHECK(bicyclic_action(nat, "ba", 3) == std::map<long, Rational>{{3, Rational(1)}});
  const auto two = BicyclicModule::scalar(Rational(2));
  CHECK(bicyclic_action(two, "b", 0) == std::map<long, Rational>{{0, Rational(2)}});
  CHECK(bicyclic_action(two, "a", 0) == std::map<long, Rational>{{0, Rational(1, 2)}});
  CHECK_THROWS(bicyclic_action(two, "a", 1));
}

TEST_CASE("Littlewood-Richardson coefficients") {
  CHECK(lr_coefficient({2}, {1}, {1}) == 1);
  CHECK(lr_coefficient({1, 1}, {1}, {1}) == 1);
  CHECK(lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}) == 2);
  CHECK(lr_coefficient({3, 1}, {3, 1}, {}) == 1);
  CHECK(lr_coefficient({3}, {1}, {1}) == 0);
  for (int n = 0; n <= 5; ++n) {
    for (int a = 0; a <= n; ++a) {
      for (const auto& mu : partitions_of(a)) {
        for (const auto& nu : partitions_of(n - a)) {
          long weighted = 0;
          for (const auto& lambda : partitions_of(n)) {
            const long c = lr_coefficient(lambda, mu, nu);
            CHECK(c == lr_coefficient(lambda, nu, mu));
            CHECK(c == lr_coefficient(conjugate(lambda), conjugate(mu), conjugate(nu)));
            weighted += c * syt(lambda);
          }
          CHECK(weighted == factorial(n) / (factorial(a) * factorial(n - a)) * syt(mu) * syt(nu));
        }
      }
    }
  }
}

TEST_CASE("Littlewood-Richardson coefficients match induced characters") {
  for (int n = 2; n <= 4; ++n) {
    for (int a = 1; a < n; ++a) {
      for (const auto& mu : partitions_of(a)) {
        for (const auto& nu : partitions_of(n - a)) {
          for (const auto& lambda : partitions_of(n)) {
            CHECK(lr_coefficient(lambda, mu, nu) == induced_character_lr(lambda, mu, nu));
          }
        }
      }
    }
  }
}

TEST_CASE("product and coproduct examples") {
  CHECK(bialgebra_product(GrothKey{{1}, 0}, GrothKey{{1}, 0}) == key({2}, 0) + key({1, 1}, 0));
  CHECK(bialgebra_product(GrothKey{{}, 0}, GrothKey{{2, 1}, 3}) == key({2, 1}, 3));
  CHECK(bialgebra_product(GrothKey{{1}, 1}, GrothKey{{}, 2}) == key({1}, 3));
  const GrothKey e{{}, 0};
  CHECK(bialgebra_coproduct(GrothKey{{}, 1}) ==
        GrothTensor2{{{e, GrothKey{{}, 1}}, Rational(1)}, {{GrothKey{{}, 1}, e}, Rational(1)}});
  CHECK(bialgebra_coproduct(GrothKey{{1}, 0}) ==
        GrothTensor2{{{GrothKey{{1}, 0}, e}, Rational(1)}, {{e, GrothKey{{1}, 0}}, Rational(1)}});
  CHECK(counit(e) == Rational(1));
  CHECK(counit(GrothKey{{}, 1}) == Rational(0));
  CHECK(counit(GrothKey{{1}, 0}) == Rational(0));
}

TEST_CASE("coproduct is not multiplicative on the slack generator") {
  const GrothKey slack{{}, 1};
  const GrothTensor2 lhs = bialgebra_coproduct(bialgebra_product(slack, slack));
  const GrothTensor2 rhs = tensor_product(bialgebra_coproduct(slack), bialgebra_coproduct(slack));
  CHECK(lhs.at({slack, slack}) == Rational(1));
  CHECK(rhs.at({slack, slack}) == Rational(2));
  const GrothKey box{{1}, 0};
  CHECK(bialgebra_coproduct(bialgebra_product(box, box)) ==
        tensor_product(bialgebra_coproduct(box), bialgebra_coproduct(box)));
}

TEST_CASE("bialgebra report") {
  const BialgebraReport rep = bialgebra_check(5);
  CHECK(rep.coassociativity.ok());
  CHECK(rep.counit.ok());
  CHECK(rep.associativity.ok());
  CHECK(rep.multiplicativity.checks > 0);
}

TEST_CASE("the isomorphism on rook triples") {
  CHECK(phi(RookTriple{{2, 1}, 3, 5}) == GrothKey{{2, 1}, 2});
  CHECK(phi_check(2, 5).ok());
  CHECK(phi_check(3, 5).ok());
  CHECK(phi_check(0, 5).ok());
}
