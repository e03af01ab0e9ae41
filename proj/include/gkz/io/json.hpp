#pragma once

#include <json.hpp>

#include "gkz/frobenius.hpp"
#include "gkz/resonance.hpp"
#include "gkz/sums.hpp"
#include "gkz/weights.hpp"

namespace gkz::io {

using json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become numbers, others decimal strings.
json to_json(const Integer& v);
/// Integral rationals as integers, others as "a/b".
json to_json(const Rational& v);

json to_json(const FiniteField& k);  // {"p","e","modulus","generator"}
json to_json(const CharacterSpec& chi);  // {"chi":[...]}
json to_json(const IntMatrix& M);  // row-major arrays
json to_json(const CycloNumber& x);  // {"conductor","coeffs"}
/// {"value":{conductor, coeffs}, "complex":[re, im], "magnitude"}.
json value_json(const CycloNumber& x);
json to_json(const WeightPolynomial& f);  // {"coeffs":{"k":c}}
json to_json(const SpectrumPrediction& s);  // {"degree","weights":{"v":count}}
json to_json(const FaceLattice& L);  // {"faces":[{dim, generators, parents}]}
json to_json(const FaceEvidence& ev);
json to_json(const NonresonanceReport& r);
json to_json(const NondegeneracyReport& r);
/// Coefficients written over their common conductor.
json to_json(const Charpoly& cp);
json to_json(const Check& c);
json to_json(const WeightReport& r);

IntMatrix int_matrix_from_json(const json& j);
/// Read back a {"conductor","coeffs"} object.
CycloNumber cyclo_from_json(const json& j);

}  // namespace gkz::io
