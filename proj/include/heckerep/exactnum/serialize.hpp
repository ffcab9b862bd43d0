#pragma once

#include "json.hpp"

#include "heckerep/exactnum/cyclotomic.hpp"
#include "heckerep/exactnum/exact_matrix.hpp"
#include "heckerep/exactnum/polynomial.hpp"

namespace heckerep {

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
nlohmann::json to_json(const Integer& z);
Integer integer_from_json(const nlohmann::json& j);

// {"order": N, "coeffs": [[num, den], ...], "approx": [re, im]}
nlohmann::json to_json(const CycNumber& x);
CycNumber cyc_from_json(const nlohmann::json& j);

// Coefficient array, constant term first.
nlohmann::json to_json(const IntPolynomial& p);
IntPolynomial int_poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RatPolynomial& p);
nlohmann::json to_json(const CycPolynomial& p);

// {"rows": r, "cols": c, "order": N, "entries": [[CycNumber, ...], ...]}
nlohmann::json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace heckerep
