#pragma once

#include <json.hpp>

#include "ppdiamond/polynomial.hpp"

namespace ppd {

/// {"period", "degree", "valid_from", "coeffs": [[rational strings]]}
nlohmann::ordered_json to_json(const QuasiPolynomial& q);
QuasiPolynomial quasipoly_from_json(const nlohmann::ordered_json& j);

/// Ascending coefficient strings.
nlohmann::ordered_json to_json(const Polynomial& p);

}  // namespace ppd
