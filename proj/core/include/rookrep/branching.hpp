#ifndef ROOKREP_BRANCHING_HPP
#define ROOKREP_BRANCHING_HPP

#include <array>
#include <string>
#include <vector>

#include "rookrep/combinatorics.hpp"

namespace rookrep {

/// Labels of the restriction of the level-n irreducible lambda to level n-1, sorted.
/// lambda itself is kept when |lambda| < n.
std::vector<Multipartition> restrict_label(const Multipartition& lambda, int n);

struct BratteliGraph {
  int r = 1;
  std::vector<std::vector<Multipartition>> levels;
  std::vector<std::array<int, 3>> edges;  // {m, index at level m-1, index at level m}

  int n_max() const { return static_cast<int>(levels.size()) - 1; }
  /// Index of lambda at level m, or -1.
  int vertex_index(int m, const Multipartition& lambda) const;
  friend bool operator==(const BratteliGraph&, const BratteliGraph&) = default;
};

BratteliGraph bratteli_graph(int r, int n_max);

/// Paths from the level-0 vertex to lambda at level n.
long count_paths(const BratteliGraph& g, const Multipartition& lambda, int n);

std::string export_graph(const BratteliGraph& g, const std::string& format);
BratteliGraph parse_graph_json(const std::string& text);
BratteliGraph parse_graph_dot(const std::string& text);

}  // namespace rookrep

#endif  // ROOKREP_BRANCHING_HPP
