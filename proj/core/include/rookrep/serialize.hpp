#ifndef ROOKREP_SERIALIZE_HPP
#define ROOKREP_SERIALIZE_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "rookrep/exactnum.hpp"
#include "rookrep/grothendieck.hpp"
#include "rookrep/jucysmurphy.hpp"
#include "rookrep/matrix.hpp"
#include "rookrep/monoid.hpp"
#include "rookrep/seminormal.hpp"

namespace rookrep {

using json = nlohmann::json;

// Rationals are ["num", "den"] with decimal strings.
void to_json(json& j, const Rational& q);
void from_json(const json& j, Rational& q);

// {"order": r, "coeffs": [["num","den"], ...]}
void to_json(json& j, const CycElem& z);
CycElem cyc_from_json(const json& j);

json matrix_to_json(const CycMatrix& m);

// {"n": n, "r": r, "cols": [[row, labelExp] or null, ...]}, rows 1-based.
void to_json(json& j, const RookElem& sigma);
RookElem rook_from_json(const json& j);

json tableau_to_json(const MultiTableau& L);
json representation_to_json(const Representation& rep);
json spectrum_to_json(const JmSpectrum& s);

// {"p": p, "terms": [{"lambda": [...], "m": k, "coeff": ["num","den"]}]}
json groth_to_json(const GrothVector& v);
GrothVector groth_from_json(const json& j);
json tensor_to_json(const GrothTensor2& t);

/// Parses "[[2,1],[1]]" or "[2,1]" (single component) into a multipartition.
Multipartition parse_multipartition(const std::string& text);
/// Parses "lambda:m" such as "[2,1]:3" or "[]:0".
GrothKey parse_groth_key(const std::string& text);

}  // namespace rookrep

#endif  // ROOKREP_SERIALIZE_HPP
