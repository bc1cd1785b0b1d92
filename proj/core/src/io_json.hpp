#pragma once

// Private JSON helpers shared by io.cpp and harness.cpp.

#include <json.hpp>

#include <string_view>

#include "bruhat/hypercube.hpp"
#include "bruhat/polynomial.hpp"

namespace bruhat {

nlohmann::json polynomial_json(const QPolynomial& p);
QPolynomial polynomial_from_json_value(const nlohmann::json& j);
nlohmann::json reflection_json(Reflection t);
nlohmann::json decomposition_json(const BruhatInterval& iv, const HypercubeDecomposition& hcd);
/// Wraps parse errors in BruhatError.
nlohmann::json parse_json(std::string_view text);

}  // namespace bruhat
