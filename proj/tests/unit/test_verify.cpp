#include <doctest.h>

#include <stdexcept>

#include "rookrep/verify.hpp"

using namespace rookrep;

TEST_CASE("suites that hold") {
  for (const char* name : {"monoid", "dimension", "representations", "jm", "bratteli", "branching", "centrality",
                           "primefield"}) {
    const SuiteReport rep = run_suite(name);
    CHECK_MESSAGE(rep.passed(), name);
    CHECK(rep.checks > 0);
  }
}

TEST_CASE("restricted parameters") {
  SuiteParams one;
  one.n = 3;
  one.r = 2;
  const SuiteReport rep = run_suite("jm", one);
  CHECK(rep.passed());
  CHECK(rep.checks > 0);
  SuiteParams small;
  small.n = 2;
  small.r = 1;
  CHECK(run_suite("gelfand", small).passed());
}

TEST_CASE("Gelfand suite flags even r") {
  SuiteParams p;
  p.n = 1;
  p.r = 2;
  CHECK_FALSE(run_suite("gelfand", p).passed());
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument); }

TEST_CASE("names") {
  CHECK(suite_names().back() == "all");
  CHECK(suite_names().size() == 12);
}
