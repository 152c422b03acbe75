#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rookrep/verify.hpp"

using namespace rookrep;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<SuiteReport()> run;
  double budget_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "monoid counts", [] { return suite_monoid(); }, 1},
      {2, "semisimple dimension identity", [] { return suite_dimension(); }, 1},
      {3, "representation correctness", [] { return suite_representations(); }, 120},
      {4, "Jucys-Murphy commutation, spectra, separation", [] { return suite_jm(); }, 60},
      {5, "Bratteli diagram r=2 up to level 2", [] { return suite_bratteli(); }, 1},
      {6, "module-level branching", [] { return suite_branching(); }, 60},
      {7, "Gelfand model", [] { return suite_gelfand(); }, 60},
      {8, "centrality of symmetric polynomials", [] { return suite_centrality(); }, 60},
      {9, "Chevalley and bicyclic relations", [] { return suite_chevalley(); }, 60},
      {10, "characteristic zero bialgebra and Phi", [] { return suite_bialgebra(); }, 60},
      {11, "prime-field eigenvalues", [] { return suite_primefield(); }, 60},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const SuiteReport rep = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_seconds;
    const bool ok = rep.passed() && in_time;
    failed += !ok;
    std::printf("%s criterion %d: %s (%ld checks, %zu failures, %.3f s of %.0f s)\n", ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), rep.checks, rep.failures.size(), secs, c.budget_seconds);
    if (!in_time) std::printf("    over time budget\n");
    for (std::size_t k = 0; k < rep.failures.size() && k < 5; ++k) std::printf("    %s\n", rep.failures[k].c_str());
    if (rep.failures.size() > 5) std::printf("    ... %zu more\n", rep.failures.size() - 5);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
