#include "rookrep/serialize.hpp"

#include <stdexcept>

namespace rookrep {

void to_json(json& j, const Rational& q) { j = json::array({q.numerator_str(), q.denominator_str()}); }

void from_json(const json& j, Rational& q) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational must be [\"num\",\"den\"]");
  q = Rational::from_strings(j[0].get<std::string>(), j[1].get<std::string>());
}

void to_json(json& j, const CycElem& z) {
  j = json{{"order", z.order()}, {"coeffs", z.coeffs()}};
}

CycElem cyc_from_json(const json& j) {
  const int order = j.at("order").get<int>();
  const auto coeffs = j.at("coeffs").get<std::vector<Rational>>();
  if (coeffs.size() != static_cast<std::size_t>(order)) throw std::invalid_argument("coeffs length must equal order");
  return CycElem(order, coeffs);
}

json matrix_to_json(const CycMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

void to_json(json& j, const RookElem& sigma) {
  json cols = json::array();
  for (int c = 0; c < sigma.n(); ++c) {
    if (sigma.row_of(c) < 0) {
      cols.push_back(nullptr);
    } else {
      cols.push_back(json::array({sigma.row_of(c) + 1, sigma.label_of(c)}));
    }
  }
  j = json{{"n", sigma.n()}, {"r", sigma.r()}, {"cols", cols}};
}

RookElem rook_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  const int r = j.at("r").get<int>();
  const auto& cols = j.at("cols");
  if (!cols.is_array() || cols.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("cols must have n entries");
  std::vector<int> rows(static_cast<std::size_t>(n), -1);
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].is_null()) continue;
    rows[c] = cols[c].at(0).get<int>() - 1;
    labels[c] = cols[c].at(1).get<int>();
    if (rows[c] < 0) throw std::invalid_argument("rows are 1-based");
  }
  return RookElem(n, r, rows, labels);
}

json tableau_to_json(const MultiTableau& L) { return L.as_arrays(); }

json representation_to_json(const Representation& rep) {
  json basis = json::array();
  for (const auto& L : rep.basis) basis.push_back(tableau_to_json(L));
  json mats;
  mats["P"] = rep.mats.P ? matrix_to_json(*rep.mats.P) : json(nullptr);
  mats["Q"] = rep.mats.Q ? matrix_to_json(*rep.mats.Q) : json(nullptr);
  mats["s"] = json::array();
  for (const auto& s : rep.mats.s) mats["s"].push_back(matrix_to_json(s));
  return json{{"label", rep.label}, {"n", rep.n}, {"r", rep.r}, {"basis", basis}, {"matrices", mats}};
}

json spectrum_to_json(const JmSpectrum& s) {
  json rows = json::array();
  for (const auto& row : s.rows) {
    rows.push_back(json{{"tableau", tableau_to_json(row.L)}, {"X", row.x}, {"Y", row.y}});
  }
  return json{{"rows", rows}, {"violations", s.violations}};
}

json groth_to_json(const GrothVector& v) {
  json terms = json::array();
  for (const auto& [k, c] : v.terms()) terms.push_back(json{{"lambda", k.lambda}, {"m", k.m}, {"coeff", c}});
  return json{{"p", v.p()}, {"terms", terms}};
}

GrothVector groth_from_json(const json& j) {
  GrothVector v(j.value("p", 0));
  for (const auto& t : j.at("terms")) {
    v.add(GrothKey{t.at("lambda").get<Partition>(), t.at("m").get<int>()}, t.at("coeff").get<Rational>());
  }
  return v;
}

json tensor_to_json(const GrothTensor2& t) {
  json terms = json::array();
  for (const auto& [pair, c] : t) {
    terms.push_back(json{{"left", {{"lambda", pair.first.lambda}, {"m", pair.first.m}}},
                         {"right", {{"lambda", pair.second.lambda}, {"m", pair.second.m}}},
                         {"coeff", c}});
  }
  return json{{"terms", terms}};
}

Multipartition parse_multipartition(const std::string& text) {
  const json j = json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("multipartition must be a JSON array");
  Multipartition out;
  if (j.empty() || j[0].is_number()) {
    out.push_back(j.get<Partition>());
  } else {
    out = j.get<Multipartition>();
  }
  for (const auto& p : out) {
    if (!is_partition(p)) throw std::invalid_argument("not a partition: " + json(p).dump());
  }
  return out;
}

GrothKey parse_groth_key(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos) throw std::invalid_argument("expected lambda:m, e.g. []:0");
  const json lam = json::parse(text.substr(0, colon));
  GrothKey k{lam.get<Partition>(), std::stoi(text.substr(colon + 1))};
  if (!is_partition(k.lambda) || k.m < 0) throw std::invalid_argument("bad basis symbol " + text);
  return k;
}

}  // namespace rookrep
