#pragma once

// Property checks shared by the unit tests and the acceptance runner. Each
// returns the number of violations found (0 means the property held).

#include <string>
#include <vector>

#include "bruhat/element_set.hpp"
#include "bruhat/hypercube.hpp"
#include "bruhat/interval.hpp"
#include "bruhat/reflection_order.hpp"

namespace checks {

/// Every nonempty lower set of the interval.
std::vector<bruhat::ElementSet> down_sets(const bruhat::BruhatInterval& iv);

/// For each diamond with bottom labels t1 < t1' (left path t1 then t2, right
/// path t1' then t2'): t1 < t2 > t2' < t1'. So exactly one of the two paths
/// is increasing whenever either is.
int diamond_label_violations(const bruhat::BruhatInterval& iv, const bruhat::ReflectionOrder& order);

/// For each cluster and antichain Y, the number of orderings of Y whose chain
/// x -> theta(y1) -> theta(y1,y2) -> ... is increasing must be exactly one.
int chain_uniqueness_violations(const bruhat::BruhatInterval& iv, const bruhat::HypercubeDecomposition& hcd,
                                const bruhat::ReflectionOrder& order);

/// Every diamond-closed lower set equals the diamond closure of the bottom
/// and the atoms it contains.
int atom_closure_violations(const bruhat::BruhatInterval& iv);

/// For a simple interval, every diamond-closed lower set equals the
/// interval intersected with the coset W'u, W' generated by its atom
/// reflections.
int coset_form_violations(const bruhat::BruhatInterval& iv);

/// Checks on Htilde against Rtilde implied by the order properties:
/// (E1) gives Htilde >= Rtilde, (E2) gives Htilde <= Rtilde, (E) equality.
/// `orders_with_e` counts how many orders had property (E).
int order_property_violations(const bruhat::BruhatInterval& iv, const bruhat::HypercubeDecomposition& hcd,
                              const std::vector<bruhat::ReflectionOrder>& orders, bruhat::KLTable& table,
                              int* orders_with_e = nullptr);

}  // namespace checks
