#include "rookrep/branching.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace rookrep {

std::vector<Multipartition> restrict_label(const Multipartition& lambda, int n) {
  const int k = size(lambda);
  if (k > n) throw std::invalid_argument("restrict_label: label too large for level");
  std::vector<Multipartition> out;
  for (std::size_t c = 0; c < lambda.size(); ++c) {
    for (const auto& b : removable_addable(lambda[c]).removable) {
      Multipartition mu = lambda;
      mu[c] = remove_box(lambda[c], b);
      out.push_back(std::move(mu));
    }
  }
  if (k < n) out.push_back(lambda);
  std::sort(out.begin(), out.end());
  return out;
}

int BratteliGraph::vertex_index(int m, const Multipartition& lambda) const {
  if (m < 0 || m > n_max()) return -1;
  const auto& level = levels[static_cast<std::size_t>(m)];
  const auto it = std::find(level.begin(), level.end(), lambda);
  return it == level.end() ? -1 : static_cast<int>(it - level.begin());
}

BratteliGraph bratteli_graph(int r, int n_max) {
  if (r < 1 || n_max < 0) throw std::invalid_argument("bratteli_graph: need r >= 1, n_max >= 0");
  BratteliGraph g;
  g.r = r;
  for (int m = 0; m <= n_max; ++m) {
    std::vector<Multipartition> level;
    for (auto& [lvl, lambda] : multipartitions_up_to(r, m)) level.push_back(std::move(lambda));
    g.levels.push_back(std::move(level));
  }
  for (int m = 1; m <= n_max; ++m) {
    const auto& level = g.levels[static_cast<std::size_t>(m)];
    for (std::size_t to = 0; to < level.size(); ++to) {
      for (const auto& mu : restrict_label(level[to], m)) {
        g.edges.push_back({m, g.vertex_index(m - 1, mu), static_cast<int>(to)});
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

long count_paths(const BratteliGraph& g, const Multipartition& lambda, int n) {
  const int target = g.vertex_index(n, lambda);
  if (target < 0) throw std::invalid_argument("count_paths: vertex not in graph");
  std::vector<long> ways{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<long> next(g.levels[static_cast<std::size_t>(m)].size(), 0);
    for (const auto& e : g.edges) {
      if (e[0] == m) next[static_cast<std::size_t>(e[2])] += ways[static_cast<std::size_t>(e[1])];
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(target)];
}

namespace {

std::string label_json(const Multipartition& lambda) { return nlohmann::json(lambda).dump(); }

std::string node_id(int m, const Multipartition& lambda) {
  return "\"" + std::to_string(m) + ":" + label_json(lambda) + "\"";
}

}  // namespace

std::string export_graph(const BratteliGraph& g, const std::string& format) {
  if (format == "json") {
    nlohmann::json j;
    j["r"] = g.r;
    j["levels"] = g.levels;
    j["edges"] = g.edges;
    return j.dump(2) + "\n";
  }
  if (format == "dot") {
    std::ostringstream os;
    os << "graph bratteli {\n  rankdir=TB;\n";
    for (std::size_t m = 0; m < g.levels.size(); ++m) {
      os << "  subgraph level_" << m << " {\n    rank=same;\n";
      for (const auto& lambda : g.levels[m]) {
        os << "    " << node_id(static_cast<int>(m), lambda) << " [label=\"" << label_json(lambda)
           << "\"];\n";
      }
      os << "  }\n";
    }
    for (const auto& e : g.edges) {
      os << "  " << node_id(e[0] - 1, g.levels[static_cast<std::size_t>(e[0] - 1)][static_cast<std::size_t>(e[1])])
         << " -- " << node_id(e[0], g.levels[static_cast<std::size_t>(e[0])][static_cast<std::size_t>(e[2])])
         << ";\n";
    }
    os << "}\n";
    return os.str();
  }
  throw std::invalid_argument("export_graph: unknown format '" + format + "'");
}

BratteliGraph parse_graph_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  BratteliGraph g;
  g.r = j.at("r").get<int>();
  g.levels = j.at("levels").get<std::vector<std::vector<Multipartition>>>();
  g.edges = j.at("edges").get<std::vector<std::array<int, 3>>>();
  return g;
}

BratteliGraph parse_graph_dot(const std::string& text) {
  static const std::regex node_re(R"re(^\s*"(\d+):([^"]*)"\s*\[label=)re");
  static const std::regex edge_re(R"re(^\s*"(\d+):([^"]*)"\s*--\s*"(\d+):([^"]*)"\s*;)re");
  BratteliGraph g;
  std::istringstream in(text);
  std::string line;
  std::vector<std::array<std::string, 4>> raw_edges;
  while (std::getline(in, line)) {
    std::smatch m;
    if (std::regex_search(line, m, edge_re)) {
      raw_edges.push_back({m[1], m[2], m[3], m[4]});
    } else if (std::regex_search(line, m, node_re)) {
      const auto level = static_cast<std::size_t>(std::stoi(m[1]));
      if (g.levels.size() <= level) g.levels.resize(level + 1);
      g.levels[level].push_back(nlohmann::json::parse(m[2].str()).get<Multipartition>());
    }
  }
  if (g.levels.empty() || g.levels[0].empty()) throw std::invalid_argument("parse_graph_dot: no level-0 vertex");
  g.r = static_cast<int>(g.levels[0][0].size());
  for (const auto& e : raw_edges) {
    const int from_level = std::stoi(e[0]);
    const int to_level = std::stoi(e[2]);
    const int from = g.vertex_index(from_level, nlohmann::json::parse(e[1]).get<Multipartition>());
    const int to = g.vertex_index(to_level, nlohmann::json::parse(e[3]).get<Multipartition>());
    if (from < 0 || to < 0 || to_level != from_level + 1) throw std::invalid_argument("parse_graph_dot: bad edge");
    g.edges.push_back({to_level, from, to});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace rookrep
