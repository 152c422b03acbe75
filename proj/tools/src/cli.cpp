#include "rookrep_cli/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rookrep/branching.hpp"
#include "rookrep/grothendieck.hpp"
#include "rookrep/jucysmurphy.hpp"
#include "rookrep/monoid.hpp"
#include "rookrep/seminormal.hpp"
#include "rookrep/serialize.hpp"
#include "rookrep/verify.hpp"

namespace rookrep::cli {

namespace {

constexpr int kMaxN = 6;
constexpr int kMaxR = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void guard_n(int n, const char* flag = "--n") {
  if (n < 0 || n > kMaxN) throw UsageError(std::string(flag) + " must lie in [0, " + std::to_string(kMaxN) + "]");
}

void guard_r(int r) {
  if (r < 1 || r > kMaxR) throw UsageError("--r must lie in [1, " + std::to_string(kMaxR) + "]");
}

void guard_p(int p) {
  if (!is_prime(p)) throw UsageError("--p must be prime");
}

Multipartition lambda_arg(const std::string& text, std::optional<int> r) {
  Multipartition lambda;
  try {
    lambda = parse_multipartition(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--lambda: ") + e.what());
  }
  if (r && static_cast<int>(lambda.size()) != *r) {
    throw UsageError("--lambda has " + std::to_string(lambda.size()) + " components but --r is " + std::to_string(*r));
  }
  guard_r(static_cast<int>(lambda.size()));
  return lambda;
}

GrothKey key_arg(const std::string& text, const char* flag) {
  try {
    return parse_groth_key(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

struct Options {
  std::optional<int> n;
  std::optional<int> r;
  std::optional<int> p;
  std::optional<int> nmax;
  std::optional<int> degree;
  std::string lambda;
  std::string format = "json";
  std::string suite;
  std::string apply;
  std::string start = "[]:0";
  std::string op = "product";
  std::string x;
  std::string y;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_enumerate(const Options& o, std::ostream& out) {
  const int n = o.n.value_or(0);
  const int r = o.r.value_or(1);
  guard_n(n);
  guard_r(r);
  const long order = monoid_order(n, r);
  if (order > kMaxEnumeratedElements) {
    throw UsageError("monoid has " + std::to_string(order) + " elements; listing is capped at " +
                     std::to_string(kMaxEnumeratedElements));
  }
  json elems = json::array();
  for (const auto& e : enumerate_elements(n, r)) elems.push_back(e);
  emit(out, json{{"n", n}, {"r", r}, {"order", order}, {"elements", elems}});
  return 0;
}

int cmd_irrep(const Options& o, std::ostream& out) {
  if (o.lambda.empty()) throw UsageError("irrep needs --lambda");
  const Multipartition lambda = lambda_arg(o.lambda, o.r);
  const int n = o.n.value_or(size(lambda));
  guard_n(n);
  if (size(lambda) > n) throw UsageError("|lambda| exceeds --n");
  emit(out, representation_to_json(rook_irrep(lambda, n)));
  return 0;
}

int cmd_bratteli(const Options& o, std::ostream& out) {
  const int r = o.r.value_or(1);
  const int nmax = o.nmax.value_or(o.n.value_or(2));
  guard_r(r);
  guard_n(nmax, "--nmax");
  if (o.format != "json" && o.format != "dot") throw UsageError("--format must be json or dot");
  const std::string text = export_graph(bratteli_graph(r, nmax), o.format);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
  return 0;
}

int cmd_jm_spectrum(const Options& o, std::ostream& out) {
  if (o.lambda.empty()) throw UsageError("jm-spectrum needs --lambda");
  const Multipartition lambda = lambda_arg(o.lambda, o.r);
  const int n = o.n.value_or(size(lambda));
  guard_n(n);
  if (size(lambda) > n) throw UsageError("|lambda| exceeds --n");
  const Representation rep = rook_irrep(lambda, n);
  json j = spectrum_to_json(jm_spectrum(rep));
  j["label"] = rep.label;
  j["n"] = n;
  emit(out, j);
  return 0;
}

int cmd_groth(const Options& o, std::ostream& out) {
  const int p = o.p.value_or(2);
  guard_p(p);
  const GrothKey start = key_arg(o.start, "--start");
  if (!is_p_regular(start.lambda, p)) throw UsageError("--start label is not p-regular");
  GrothVector v = GrothVector::basis(start.lambda, start.m, p);
  try {
    if (!o.apply.empty()) v = apply_operator_word(o.apply, v);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--apply: ") + e.what());
  }
  json j = groth_to_json(v);
  j["word"] = o.apply;
  emit(out, j);
  return 0;
}

int cmd_bialgebra(const Options& o, std::ostream& out) {
  if (o.x.empty()) throw UsageError("bialgebra needs --x");
  const GrothKey x = key_arg(o.x, "--x");
  if (o.op == "product") {
    if (o.y.empty()) throw UsageError("product needs --y");
    const GrothKey y = key_arg(o.y, "--y");
    if (degree(x) + degree(y) > 2 * kMaxN) throw UsageError("total degree too large");
    emit(out, groth_to_json(bialgebra_product(x, y)));
  } else if (o.op == "coproduct") {
    if (degree(x) > 2 * kMaxN) throw UsageError("degree too large");
    emit(out, tensor_to_json(bialgebra_coproduct(x)));
  } else if (o.op == "counit") {
    emit(out, json(counit(x)));
  } else {
    throw UsageError("--op must be product, coproduct or counit");
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::string name = o.suite.empty() ? "all" : o.suite;
  SuiteParams params;
  if (o.n) {
    guard_n(*o.n);
    params.n = o.n;
  }
  if (o.r) {
    guard_r(*o.r);
    params.r = o.r;
  }
  if (o.p) {
    guard_p(*o.p);
    params.p = o.p;
  }
  if (o.degree) {
    if (*o.degree < 0 || *o.degree > 8) throw UsageError("--degree must lie in [0, 8]");
    params.degree = o.degree;
  }
  SuiteReport rep;
  try {
    rep = run_suite(name, params);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(out, json{{"suite", name}, {"checks", rep.checks}, {"failures", rep.failures}, {"passed", rep.passed()}});
  return rep.passed() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Representations of generalized rook monoids, in exact arithmetic", "rookrep"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "rank n");
    sub->add_option("--r", o.r, "cyclic group order r");
  };
  auto* enumerate = app.add_subcommand("enumerate", "list the elements of C_r wr R_n");
  common(enumerate);
  auto* irrep = app.add_subcommand("irrep", "seminormal matrices of P, Q and s_j for an irreducible");
  common(irrep);
  irrep->add_option("--lambda", o.lambda, "multipartition as JSON, e.g. [[1],[1]]");
  auto* bratteli = app.add_subcommand("bratteli", "Bratteli diagram up to level nmax");
  common(bratteli);
  bratteli->add_option("--nmax", o.nmax, "top level");
  bratteli->add_option("--format", o.format, "json or dot");
  auto* spectrum = app.add_subcommand("jm-spectrum", "Jucys-Murphy eigenvalues on the seminormal basis");
  common(spectrum);
  spectrum->add_option("--lambda", o.lambda, "multipartition as JSON");
  auto* groth = app.add_subcommand("groth", "apply a word in e_i, f_i, A, B to a Grothendieck basis vector");
  groth->add_option("--p", o.p, "prime characteristic");
  groth->add_option("--apply", o.apply, "operator word such as \"f0 f1 B\", rightmost first");
  groth->add_option("--start", o.start, "basis symbol lambda:m, default []:0");
  auto* bialgebra = app.add_subcommand("bialgebra", "product, coproduct or counit in characteristic zero");
  bialgebra->add_option("--op", o.op, "product, coproduct or counit");
  bialgebra->add_option("--x", o.x, "basis symbol lambda:m");
  bialgebra->add_option("--y", o.y, "second factor for product");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify);
  verify->add_option("--suite", o.suite, "suite name or all")->check(CLI::IsMember(suite_names()));
  verify->add_option("--p", o.p, "restrict to one prime");
  verify->add_option("--degree", o.degree, "degree bound for Grothendieck suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*enumerate) return cmd_enumerate(o, out);
    if (*irrep) return cmd_irrep(o, out);
    if (*bratteli) return cmd_bratteli(o, out);
    if (*spectrum) return cmd_jm_spectrum(o, out);
    if (*groth) return cmd_groth(o, out);
    if (*bialgebra) return cmd_bialgebra(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "rookrep: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "rookrep: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace rookrep::cli
