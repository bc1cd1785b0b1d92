#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bruhat/element_set.hpp"
#include "bruhat/interval.hpp"
#include "bruhat/kl.hpp"
#include "bruhat/polynomial.hpp"

namespace bruhat {

/// Edges x1 -> x2 -> x4 and x1 -> x3 -> x4 in Gamma(u,v), x2 < x3 by index.
struct Diamond {
  int x1 = 0;
  int x2 = 0;
  int x3 = 0;
  int x4 = 0;

  friend bool operator==(const Diamond&, const Diamond&) = default;
};

[[nodiscard]] std::vector<Diamond> enumerate_diamonds(const BruhatInterval& iv);

/// Diamonds of an interval with per-vertex incidence, reused across the
/// closure and closedness queries made for many candidate ideals.
class DiamondIndex {
 public:
  explicit DiamondIndex(const BruhatInterval& iv);

  [[nodiscard]] const std::vector<Diamond>& diamonds() const { return diamonds_; }
  [[nodiscard]] const std::vector<int>& incident(int vertex) const { return incident_[vertex]; }

 private:
  std::vector<Diamond> diamonds_;
  std::vector<std::vector<int>> incident_;
};

/// The x3 completing x1 -> x2 -> x4 to a diamond. Throws BruhatError when the
/// completing pair is not inside Gamma(u,v).
[[nodiscard]] int diamond_flip(const BruhatInterval& iv, int x1, int x2, int x4);

[[nodiscard]] ElementSet diamond_closure(const DiamondIndex& diamonds, const ElementSet& seed);
[[nodiscard]] ElementSet diamond_closure(const BruhatInterval& iv, const ElementSet& seed);
[[nodiscard]] bool is_diamond_closed(const DiamondIndex& diamonds, const ElementSet& subset);
[[nodiscard]] bool is_diamond_closed(const BruhatInterval& iv, const ElementSet& subset);

/// {x in iv : x <= z}.
[[nodiscard]] ElementSet lower_ideal(const BruhatInterval& iv, int z);
[[nodiscard]] bool is_lower_set(const BruhatInterval& iv, const ElementSet& subset);

/// theta_x: antichains over x (bitmasks over frontier positions) -> elements.
class HypercubeCluster {
 public:
  HypercubeCluster() = default;
  HypercubeCluster(int base, std::vector<int> frontier,
                   std::vector<std::pair<std::uint64_t, int>> images);

  [[nodiscard]] int base() const { return base_; }
  /// Y_x: targets of Bruhat edges from x leaving the ideal, ascending.
  [[nodiscard]] const std::vector<int>& frontier() const { return frontier_; }
  /// (antichain mask, theta image), sorted by (popcount, mask).
  [[nodiscard]] const std::vector<std::pair<std::uint64_t, int>>& images() const { return images_; }
  [[nodiscard]] std::optional<int> image(std::uint64_t mask) const;
  /// Frontier elements selected by mask.
  [[nodiscard]] std::vector<int> antichain(std::uint64_t mask) const;

  friend bool operator==(const HypercubeCluster&, const HypercubeCluster&) = default;

 private:
  int base_ = 0;
  std::vector<int> frontier_;
  std::vector<std::pair<std::uint64_t, int>> images_;
};

enum class ClusterFailure {
  None,
  NoCompletion,
  AmbiguousCompletion,
  HC3Violated,
  HC4Violated,
  NotInjective,
};
[[nodiscard]] const char* to_string(ClusterFailure f);

struct ClusterResult {
  std::optional<HypercubeCluster> cluster;
  ClusterFailure failure = ClusterFailure::None;
  std::string detail;

  [[nodiscard]] bool ok() const { return cluster.has_value(); }
};

/// Builds the strong hypercube cluster at x relative to the lower set
/// `ideal`, level by level, completing diamonds for every pair and checking
/// (HC1)-(HC4) over all antichains. Fails when no strong cluster exists.
[[nodiscard]] ClusterResult build_cluster(const BruhatInterval& iv, const ElementSet& ideal, int x);

/// Antichains (as frontier bitmasks) of the given elements, by (size, mask).
[[nodiscard]] std::vector<std::uint64_t> enumerate_antichains(const BruhatInterval& iv,
                                                              const std::vector<int>& elements);

struct HypercubeDecomposition {
  int z = 0;
  ElementSet ideal;
  /// One cluster per element of the ideal, ascending by base.
  std::vector<HypercubeCluster> clusters;

  [[nodiscard]] const HypercubeCluster* cluster_at(int x) const;
  /// z == top: the whole interval.
  [[nodiscard]] bool improper(const BruhatInterval& iv) const { return z == iv.top_index(); }
};

struct StrongCheck {
  bool strong = false;
  bool improper = false;
  /// Names the first failing axiom, empty when strong.
  std::string reason;
  std::optional<HypercubeDecomposition> decomposition;
};

[[nodiscard]] StrongCheck is_strong_hcd(const BruhatInterval& iv, int z);
[[nodiscard]] StrongCheck is_strong_hcd(const BruhatInterval& iv, const DiamondIndex& diamonds, int z);

struct ZCandidate {
  int z = 0;
  StrongCheck check;
};

/// Every z in rank order, including the improper z = v.
[[nodiscard]] std::vector<ZCandidate> enumerate_strong_hcds(const BruhatInterval& iv);

struct StandardDecomposition {
  /// Smallest value whose position differs between u and v.
  int d = 0;
  HypercubeDecomposition hcd;
};

/// The standard decomposition with clusters from the explicit cycle formula.
/// With validate set, each cluster is cross-checked against build_cluster and
/// a mismatch raises InternalInvariantError. Throws BruhatError when u == v.
[[nodiscard]] StandardDecomposition standard_hcd(const BruhatInterval& iv, bool validate = true);

/// Sum over x in I and antichains Y with theta_x(Y) = v of q^|Y| Rtilde_{u,x}.
[[nodiscard]] QPolynomial htilde(const BruhatInterval& iv, const HypercubeDecomposition& hcd,
                                 KLTable& table);

/// Atom roots linearly independent.
[[nodiscard]] bool is_simple(const BruhatInterval& iv);

/// W' = product of symmetric groups on the blocks of a partition of 1..n.
struct CosetForm {
  std::vector<std::vector<int>> blocks;
  std::vector<Reflection> generators;
};

/// Blocks of the reflection subgroup generated by `generators`.
[[nodiscard]] std::vector<std::vector<int>> subgroup_blocks(int n, const std::vector<Reflection>& generators);
/// [u,v] intersected with W'u for W' generated by `generators`.
[[nodiscard]] ElementSet coset_intersection(const BruhatInterval& iv,
                                            const std::vector<Reflection>& generators);

/// For a diamond-closed order ideal of a simple interval, the blocks of
/// W' = <T_I>, checked against ideal == [u,v] intersect W'u. Precondition
/// violations throw BruhatError; a failed check throws
/// InternalInvariantError.
[[nodiscard]] CosetForm coset_ideal_form(const BruhatInterval& iv, const ElementSet& ideal);

/// Special matchings: involutions pairing each element with a cover or
/// coatom such that x covered by y and M(x) != y imply M(x) < M(y).
/// Each matching is returned as the involution on element indices. A
/// nonzero limit stops the search after that many.
[[nodiscard]] std::vector<std::vector<int>> special_matchings(const BruhatInterval& iv,
                                                              std::size_t limit = 0);

}  // namespace bruhat
