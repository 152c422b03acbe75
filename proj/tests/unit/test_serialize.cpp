#include <doctest.h>

#include "rookrep/serialize.hpp"

using namespace rookrep;

TEST_CASE("rationals and cyclotomics") {
  const json q = Rational(-3, 4);
  CHECK(q.dump() == R"(["-3","4"])");
  CHECK(q.get<Rational>() == Rational(-3, 4));
  const CycElem z = cyc_root_power(3, 1) + CycElem(3, Rational(1, 2));
  const json jz = z;
  CHECK(jz.at("order") == 3);
  CHECK(jz.at("coeffs").size() == 3);
  CHECK(cyc_from_json(jz) == z);
  CHECK_THROWS(cyc_from_json(json{{"order", 3}, {"coeffs", json::array()}}));
}

TEST_CASE("monoid elements") {
  for (const auto& e : enumerate_elements(2, 3)) {
    const json j = e;
    CHECK(rook_from_json(j) == e);
  }
  const json p = gen_P(2, 1);
  CHECK(p.at("cols").dump() == "[null,[2,0]]");
}

TEST_CASE("Grothendieck vectors") {
  GrothVector v(3);
  v.add(GrothKey{{2, 1}, 1}, Rational(2));
  v.add(GrothKey{{}, 0}, Rational(-1, 3));
  CHECK(groth_from_json(groth_to_json(v)) == v);
}

TEST_CASE("argument parsing") {
  CHECK(parse_multipartition("[2,1]") == Multipartition{{2, 1}});
  CHECK(parse_multipartition("[[1],[]]") == Multipartition{{1}, {}});
  CHECK(parse_multipartition("[]") == Multipartition{{}});
  CHECK_THROWS(parse_multipartition("[1,2]"));
  CHECK_THROWS(parse_multipartition("{"));
  CHECK(parse_groth_key("[2,1]:3") == GrothKey{{2, 1}, 3});
  CHECK(parse_groth_key("[]:0") == GrothKey{{}, 0});
  CHECK_THROWS(parse_groth_key("[2,1]"));
  CHECK_THROWS(parse_groth_key("[1,2]:0"));
}

TEST_CASE("representation dump") {
  const json j = representation_to_json(rook_irrep({{1}, {}}, 2));
  CHECK(j.at("basis").size() == 2);
  CHECK(j.at("matrices").at("s").size() == 1);
  CHECK(j.at("n") == 2);
  CHECK(j.dump() == representation_to_json(rook_irrep({{1}, {}}, 2)).dump());
}
