#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rookrep_cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "rookrep");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = rookrep::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("enumerate") {
  const Result r = run({"enumerate", "--n", "2", "--r", "1"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("order") == 7);
  CHECK(j.at("elements").size() == 7);
  CHECK(run({"enumerate", "--n", "2", "--r", "1"}).out == r.out);
}

TEST_CASE("bratteli dot") {
  const Result r = run({"bratteli", "--r", "2", "--nmax", "2", "--format", "dot"});
  CHECK(r.code == 0);
  std::size_t edges = 0;
  for (std::size_t pos = r.out.find(" -- "); pos != std::string::npos; pos = r.out.find(" -- ", pos + 1)) ++edges;
  CHECK(edges == 14);
  const Result j = run({"bratteli", "--r", "2", "--nmax", "2"});
  CHECK(nlohmann::json::parse(j.out).at("levels").size() == 3);
}

TEST_CASE("irrep and spectrum") {
  const Result r = run({"irrep", "--lambda", "[[1],[1]]", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("basis").size() == 6);
  const Result s = run({"jm-spectrum", "--lambda", "[2,1]"});
  CHECK(s.code == 0);
  const auto js = nlohmann::json::parse(s.out);
  CHECK(js.at("rows").size() == 2);
  CHECK(js.at("violations").empty());
}

TEST_CASE("groth and bialgebra") {
  const Result g = run({"groth", "--p", "2", "--apply", "f1 f0"});
  CHECK(g.code == 0);
  const auto jg = nlohmann::json::parse(g.out);
  CHECK(jg.at("terms").size() == 1);
  CHECK(jg.at("terms")[0].at("coeff") == nlohmann::json::array({"2", "1"}));
  const Result b = run({"bialgebra", "--op", "product", "--x", "[1]:0", "--y", "[1]:0"});
  CHECK(b.code == 0);
  CHECK(nlohmann::json::parse(b.out).at("terms").size() == 2);
  const Result c = run({"bialgebra", "--op", "coproduct", "--x", "[]:1"});
  CHECK(nlohmann::json::parse(c.out).at("terms").size() == 2);
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "--suite", "jm", "--n", "3", "--r", "2"}).code == 0);
  CHECK(run({"verify", "--suite", "gelfand", "--n", "1", "--r", "2"}).code == 1);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"enumerate", "--n", "7"}).code == 2);
  CHECK(run({"enumerate", "--r", "9"}).code == 2);
  CHECK(run({"groth", "--p", "4"}).code == 2);
  CHECK(run({"irrep"}).code == 2);
  CHECK(run({"irrep", "--lambda", "[1,2]"}).code == 2);
  CHECK(run({"irrep", "--lambda", "[[1]]", "--r", "2"}).code == 2);
  CHECK(run({"bratteli", "--format", "svg"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"groth", "--start", "[1,1]:0", "--p", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
