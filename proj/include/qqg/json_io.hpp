#pragma once

#include <json.hpp>

#include "qqg/greenring.hpp"
#include "qqg/homalg.hpp"
#include "qqg/rep.hpp"

namespace qqg {

using nlohmann::json;

// CycloNum <-> array of "p/q" strings, length phi(n^2), little-endian in
// the power basis.  This form is bit-exact and shared by all export paths.
json cyclo_to_json(const CycloNum& x);
CycloNum cyclo_from_json(const CycloContext* ctx, const json& j);

json matrix_to_json(const Mat& m);
Mat matrix_from_json(const CycloContext* ctx, const json& j);

// {"n":int,"dim":int,"label":string|null,"E":[[cyclo]],"F":[[cyclo]],"K":[[cyclo]]}
json rep_to_json(const Representation& M);
// Validates on load; throws std::invalid_argument with a reason otherwise.
Representation rep_from_json(const Algebra& alg, const json& j);

// [{"a":int,"b":int,"c":int,"coeff":[rational strings]}]
json algebra_elem_to_json(const AlgebraElem& x);
AlgebraElem algebra_elem_from_json(const Algebra& alg, const json& j);

// [{"monomial":{...},"coeff":"int"}]
json green_to_json(const GreenRing& ring, const GreenElem& e);
GreenElem green_from_json(const GreenRing& ring, const json& j);

}  // namespace qqg
