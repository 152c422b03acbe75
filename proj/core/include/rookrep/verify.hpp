#ifndef ROOKREP_VERIFY_HPP
#define ROOKREP_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

namespace rookrep {

struct SuiteReport {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
  void expect(bool ok, const std::string& what);
  void merge(const SuiteReport& o);
};

/// Restricts a suite to one case; unset fields sweep the default range.
struct SuiteParams {
  std::optional<int> n;
  std::optional<int> r;
  std::optional<int> p;
  std::optional<int> degree;
};

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteParams& params = {});

SuiteReport suite_monoid(const SuiteParams& params = {});
SuiteReport suite_dimension(const SuiteParams& params = {});
SuiteReport suite_representations(const SuiteParams& params = {});
SuiteReport suite_jm(const SuiteParams& params = {});
SuiteReport suite_bratteli(const SuiteParams& params = {});
SuiteReport suite_branching(const SuiteParams& params = {});
SuiteReport suite_gelfand(const SuiteParams& params = {});
SuiteReport suite_centrality(const SuiteParams& params = {});
SuiteReport suite_chevalley(const SuiteParams& params = {});
SuiteReport suite_bialgebra(const SuiteParams& params = {});
SuiteReport suite_primefield(const SuiteParams& params = {});

}  // namespace rookrep

#endif  // ROOKREP_VERIFY_HPP
