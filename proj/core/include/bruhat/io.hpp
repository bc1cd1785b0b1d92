#pragma once

#include <string>
#include <string_view>

#include "bruhat/hypercube.hpp"
#include "bruhat/interval.hpp"
#include "bruhat/polynomial.hpp"
#include "bruhat/reflection_order.hpp"

namespace bruhat {

/// {"n", "u", "v", "elements": [one-line...], "rank": [...],
///  "hasse": [[a,b],...], "bruhat": [[a,b,[i,j]],...]}
[[nodiscard]] std::string interval_to_json(const BruhatInterval& iv, int indent = -1);

/// [[i,j], ...], smallest first.
[[nodiscard]] std::string order_to_json(const ReflectionOrder& order);
[[nodiscard]] ReflectionOrder order_from_json(std::string_view text);

/// Coefficient array, constant term first. Entries are JSON integers, or
/// decimal strings when they do not fit in 64 bits.
[[nodiscard]] std::string polynomial_to_json(const QPolynomial& p);
[[nodiscard]] QPolynomial polynomial_from_json(std::string_view text);

/// {"d", "z", "ideal": [...], "clusters": [{"x", "frontier", "images": [[[y...], w], ...]}]}
/// with elements in one-line notation.
[[nodiscard]] std::string decomposition_to_json(const BruhatInterval& iv,
                                                const HypercubeDecomposition& hcd, int indent = -1);

}  // namespace bruhat
