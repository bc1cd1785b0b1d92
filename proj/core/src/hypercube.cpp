#include "bruhat/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

namespace bruhat {

std::vector<Diamond> enumerate_diamonds(const BruhatInterval& iv) {
  std::vector<Diamond> out;
  for (int x1 = 0; x1 < iv.size(); ++x1) {
    const auto arcs = iv.out_arcs(x1);
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      for (std::size_t b = a + 1; b < arcs.size(); ++b) {
        for (int x4 : iv.common_successors(arcs[a].target, arcs[b].target)) {
          out.push_back({x1, arcs[a].target, arcs[b].target, x4});
        }
      }
    }
  }
  return out;
}

DiamondIndex::DiamondIndex(const BruhatInterval& iv)
    : diamonds_(enumerate_diamonds(iv)), incident_(static_cast<std::size_t>(iv.size())) {
  for (std::size_t k = 0; k < diamonds_.size(); ++k) {
    const Diamond& d = diamonds_[k];
    for (int vtx : {d.x1, d.x2, d.x3, d.x4}) incident_[vtx].push_back(static_cast<int>(k));
  }
}

int diamond_flip(const BruhatInterval& iv, int x1, int x2, int x4) {
  if (!iv.has_edge(x1, x2) || !iv.has_edge(x2, x4)) {
    throw BruhatError("diamond_flip needs edges x1 -> x2 -> x4");
  }
  int found = -1;
  for (const Arc& arc : iv.out_arcs(x1)) {
    if (arc.target == x2 || !iv.has_edge(arc.target, x4)) continue;
    if (found >= 0) throw InternalInvariantError("diamond flip is not unique");
    found = arc.target;
  }
  if (found < 0) {
    throw BruhatError("no diamond flip of " + iv.element(x1).to_string() + " -> " +
                      iv.element(x2).to_string() + " -> " + iv.element(x4).to_string() +
                      " inside the interval");
  }
  return found;
}

ElementSet diamond_closure(const DiamondIndex& diamonds, const ElementSet& seed) {
  ElementSet closed = seed;
  std::vector<int> work = seed.members();
  while (!work.empty()) {
    const int vtx = work.back();
    work.pop_back();
    for (int k : diamonds.incident(vtx)) {
      const Diamond& d = diamonds.diamonds()[k];
      const int corners[4] = {d.x1, d.x2, d.x3, d.x4};
      int missing = -1;
      int present = 0;
      for (int c : corners) {
        if (closed.contains(c)) {
          ++present;
        } else {
          missing = c;
        }
      }
      if (present == 3 && closed.insert(missing)) work.push_back(missing);
    }
  }
  return closed;
}

ElementSet diamond_closure(const BruhatInterval& iv, const ElementSet& seed) {
  return diamond_closure(DiamondIndex(iv), seed);
}

bool is_diamond_closed(const DiamondIndex& diamonds, const ElementSet& subset) {
  for (const Diamond& d : diamonds.diamonds()) {
    const int present = subset.contains(d.x1) + subset.contains(d.x2) + subset.contains(d.x3) +
                        subset.contains(d.x4);
    if (present == 3) return false;
  }
  return true;
}

bool is_diamond_closed(const BruhatInterval& iv, const ElementSet& subset) {
  return is_diamond_closed(DiamondIndex(iv), subset);
}

ElementSet lower_ideal(const BruhatInterval& iv, int z) {
  ElementSet ideal(iv.size());
  for (int x = 0; x < iv.size(); ++x) {
    if (iv.leq(x, z)) ideal.insert(x);
  }
  return ideal;
}

bool is_lower_set(const BruhatInterval& iv, const ElementSet& subset) {
  for (int x = 0; x < iv.size(); ++x) {
    if (!subset.contains(x)) continue;
    for (int y : iv.down_covers(x)) {
      if (!subset.contains(y)) return false;
    }
  }
  return true;
}

HypercubeCluster::HypercubeCluster(int base, std::vector<int> frontier,
                                   std::vector<std::pair<std::uint64_t, int>> images)
    : base_(base), frontier_(std::move(frontier)), images_(std::move(images)) {
  std::sort(images_.begin(), images_.end(), [](const auto& a, const auto& b) {
    const int pa = std::popcount(a.first);
    const int pb = std::popcount(b.first);
    return pa != pb ? pa < pb : a.first < b.first;
  });
}

std::optional<int> HypercubeCluster::image(std::uint64_t mask) const {
  for (const auto& [m, img] : images_) {
    if (m == mask) return img;
  }
  return std::nullopt;
}

std::vector<int> HypercubeCluster::antichain(std::uint64_t mask) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < frontier_.size(); ++k) {
    if (mask >> k & 1U) out.push_back(frontier_[k]);
  }
  return out;
}

const char* to_string(ClusterFailure f) {
  switch (f) {
    case ClusterFailure::None:
      return "none";
    case ClusterFailure::NoCompletion:
      return "no completion";
    case ClusterFailure::AmbiguousCompletion:
      return "ambiguous completion";
    case ClusterFailure::HC3Violated:
      return "HC3 violated";
    case ClusterFailure::HC4Violated:
      return "HC4 violated";
    case ClusterFailure::NotInjective:
      return "not injective";
  }
  return "?";
}

std::vector<std::uint64_t> enumerate_antichains(const BruhatInterval& iv,
                                                const std::vector<int>& elements) {
  const std::size_t m = elements.size();
  if (m > 63) throw BruhatError("antichain enumeration limited to 63 elements");
  std::vector<std::uint64_t> comparable(m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b && (iv.leq(elements[a], elements[b]) || iv.leq(elements[b], elements[a]))) {
        comparable[a] |= std::uint64_t{1} << b;
      }
    }
  }
  std::vector<std::uint64_t> out;
  auto grow = [&](auto&& self, std::size_t start, std::uint64_t mask, std::uint64_t blocked) -> void {
    out.push_back(mask);
    for (std::size_t k = start; k < m; ++k) {
      const std::uint64_t bit = std::uint64_t{1} << k;
      if (blocked & bit) continue;
      self(self, k + 1, mask | bit, blocked | comparable[k]);
    }
  };
  grow(grow, 0, 0, 0);
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

namespace {

ClusterResult fail(ClusterFailure f, std::string detail) {
  ClusterResult r;
  r.failure = f;
  r.detail = std::move(detail);
  return r;
}

std::vector<int> frontier_of(const BruhatInterval& iv, const ElementSet& ideal, int x) {
  std::vector<int> out;
  for (const Arc& arc : iv.out_arcs(x)) {
    if (!ideal.contains(arc.target)) out.push_back(arc.target);
  }
  return out;
}

}  // namespace

// build_cluster without the lower-set check, for callers that already know.
ClusterResult build_cluster_in(const BruhatInterval& iv, const ElementSet& ideal, int x) {
  if (!ideal.contains(x)) throw BruhatError("cluster base must lie in the ideal");
  const std::vector<int> frontier = frontier_of(iv, ideal, x);
  const std::size_t m = frontier.size();
  const auto antichains = enumerate_antichains(iv, frontier);
  const std::unordered_set<std::uint64_t> is_antichain(antichains.begin(), antichains.end());

  std::unordered_map<std::uint64_t, int> theta;
  theta.reserve(antichains.size());
  auto name = [&](int e) { return iv.element(e).to_string(); };

  for (const std::uint64_t mask : antichains) {
    const int size = std::popcount(mask);
    if (size == 0) {
      theta[mask] = x;
      continue;
    }
    if (size == 1) {
      theta[mask] = frontier[std::countr_zero(mask)];
      continue;
    }
    int completion = -1;
    for (std::size_t a = 0; a < m; ++a) {
      const std::uint64_t bit_a = std::uint64_t{1} << a;
      if (!(mask & bit_a)) continue;
      for (std::size_t b = a + 1; b < m; ++b) {
        const std::uint64_t bit_b = std::uint64_t{1} << b;
        if (!(mask & bit_b)) continue;
        const int left = theta.at(mask ^ bit_a);
        const int right = theta.at(mask ^ bit_b);
        if (left == right) {
          return fail(ClusterFailure::NotInjective, "two faces of one square share image " + name(left));
        }
        const auto tops = iv.common_successors(left, right);
        if (tops.empty()) {
          return fail(ClusterFailure::NoCompletion,
                      "no diamond over " + name(left) + ", " + name(right));
        }
        if (tops.size() > 1) {
          return fail(ClusterFailure::AmbiguousCompletion,
                      "several diamonds over " + name(left) + ", " + name(right));
        }
        if (completion >= 0 && completion != tops.front()) {
          return fail(ClusterFailure::AmbiguousCompletion,
                      "completion depends on the chosen pair: " + name(completion) + " vs " +
                          name(tops.front()));
        }
        completion = tops.front();
      }
    }
    theta[mask] = completion;
  }

  // (HC3) on every cover of the antichain poset.
  for (const std::uint64_t mask : antichains) {
    for (std::size_t k = 0; k < m; ++k) {
      const std::uint64_t bit = std::uint64_t{1} << k;
      if (!(mask & bit)) continue;
      if (!iv.has_edge(theta.at(mask ^ bit), theta.at(mask))) {
        return fail(ClusterFailure::HC3Violated,
                    "no edge " + name(theta.at(mask ^ bit)) + " -> " + name(theta.at(mask)));
      }
    }
  }

  // (HC4): a diamond over theta(Z+j), theta(Z+j') forces Z+j+j' to be an
  // antichain. The antichain case is settled by the construction above.
  for (const std::uint64_t z : antichains) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint64_t bj = std::uint64_t{1} << j;
      if ((z & bj) || !is_antichain.count(z | bj)) continue;
      for (std::size_t k = j + 1; k < m; ++k) {
        const std::uint64_t bk = std::uint64_t{1} << k;
        if ((z & bk) || !is_antichain.count(z | bk) || is_antichain.count(z | bj | bk)) continue;
        const int left = theta.at(z | bj);
        const int right = theta.at(z | bk);
        if (left != right && !iv.common_successors(left, right).empty()) {
          return fail(ClusterFailure::HC4Violated,
                      "diamond over " + name(left) + ", " + name(right) +
                          " although the union is not an antichain");
        }
      }
    }
  }

  // Injective on each [empty, Y]; checking maximal Y covers every such interval.
  for (const std::uint64_t mask : antichains) {
    bool maximal = true;
    for (std::size_t k = 0; k < m && maximal; ++k) {
      const std::uint64_t bit = std::uint64_t{1} << k;
      if (!(mask & bit) && is_antichain.count(mask | bit)) maximal = false;
    }
    if (!maximal) continue;
    std::unordered_set<int> seen;
    for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
      if (!seen.insert(theta.at(sub)).second) {
        return fail(ClusterFailure::NotInjective, "repeated image " + name(theta.at(sub)));
      }
      if (sub == 0) break;
    }
  }

  std::vector<std::pair<std::uint64_t, int>> images(theta.begin(), theta.end());
  ClusterResult result;
  result.cluster = HypercubeCluster(x, frontier, std::move(images));
  return result;
}

ClusterResult build_cluster(const BruhatInterval& iv, const ElementSet& ideal, int x) {
  if (!is_lower_set(iv, ideal)) throw BruhatError("cluster ideal must be a lower set");
  return build_cluster_in(iv, ideal, x);
}

const HypercubeCluster* HypercubeDecomposition::cluster_at(int x) const {
  for (const auto& c : clusters) {
    if (c.base() == x) return &c;
  }
  return nullptr;
}

StrongCheck is_strong_hcd(const BruhatInterval& iv, const DiamondIndex& diamonds, int z) {
  if (z < 0 || z >= iv.size()) throw BruhatError("z outside the interval");
  StrongCheck check;
  check.improper = z == iv.top_index();
  ElementSet ideal = lower_ideal(iv, z);
  if (!is_diamond_closed(diamonds, ideal)) {
    check.reason = "HD2: [u,z] is not diamond-closed";
    return check;
  }
  HypercubeDecomposition hcd;
  hcd.z = z;
  for (int x : ideal.members()) {
    auto result = build_cluster_in(iv, ideal, x);
    if (!result.ok()) {
      check.reason = "HD3: no strong cluster at " + iv.element(x).to_string() + ": " +
                     to_string(result.failure) + " (" + result.detail + ")";
      return check;
    }
    hcd.clusters.push_back(std::move(*result.cluster));
  }
  hcd.ideal = std::move(ideal);
  check.strong = true;
  check.decomposition = std::move(hcd);
  return check;
}

StrongCheck is_strong_hcd(const BruhatInterval& iv, int z) {
  return is_strong_hcd(iv, DiamondIndex(iv), z);
}

std::vector<ZCandidate> enumerate_strong_hcds(const BruhatInterval& iv) {
  const DiamondIndex diamonds(iv);
  std::vector<ZCandidate> out;
  out.reserve(static_cast<std::size_t>(iv.size()));
  for (int z = 0; z < iv.size(); ++z) out.push_back({z, is_strong_hcd(iv, diamonds, z)});
  return out;
}

namespace {

// Deleting the values 1..d-1 (whose positions are common to all of [u,v])
// and shifting the rest down by d-1.
Permutation standardize(const Permutation& x, int d) {
  std::vector<int> out;
  for (int e : x.entries()) {
    if (e >= d) out.push_back(e - d + 1);
  }
  return Permutation(std::move(out));
}

Permutation unstandardize(const Permutation& xs, const Permutation& u, int d) {
  const int n = u.degree();
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (int value = 1; value < d; ++value) out[u.position_of(value) - 1] = value;
  int next = 1;
  for (int k = 0; k < n; ++k) {
    if (out[k] == 0) out[k] = xs(next++) + d - 1;
  }
  return Permutation(std::move(out));
}

// x * (c_0 c_1 ... c_k) acting on positions: position c_r takes x(c_{r+1}).
Permutation times_cycle(const Permutation& x, const std::vector<int>& cycle) {
  std::vector<int> out(x.entries().begin(), x.entries().end());
  for (std::size_t r = 0; r < cycle.size(); ++r) {
    out[cycle[r] - 1] = x(cycle[(r + 1) % cycle.size()]);
  }
  return Permutation(std::move(out));
}

}  // namespace

StandardDecomposition standard_hcd(const BruhatInterval& iv, bool validate) {
  const Permutation& u = iv.bottom();
  const Permutation& v = iv.top();
  if (u == v) throw BruhatError("standard decomposition needs u < v");
  const int n = iv.degree();
  int d = 1;
  while (d <= n && u.position_of(d) == v.position_of(d)) ++d;

  // Explicit isomorphism [u,v] -> [u',v'] and back.
  const BruhatInterval reduced(standardize(u, d), standardize(v, d));
  if (reduced.size() != iv.size()) {
    throw InternalInvariantError("standardization is not a bijection on " + u.to_string() + ", " +
                                 v.to_string());
  }
  std::vector<int> to_reduced(static_cast<std::size_t>(iv.size()));
  std::vector<int> from_reduced(static_cast<std::size_t>(iv.size()));
  for (int x = 0; x < iv.size(); ++x) {
    const auto img = reduced.index_of(standardize(iv.element(x), d));
    if (!img || reduced.rank(*img) != iv.rank(x) ||
        unstandardize(reduced.element(*img), u, d) != iv.element(x)) {
      throw InternalInvariantError("standardization does not preserve the interval");
    }
    to_reduced[x] = *img;
    from_reduced[*img] = x;
  }

  const Permutation& ur = reduced.bottom();
  const int pivot = ur.position_of(1);
  const int nr = ur.degree();

  StandardDecomposition out;
  out.d = d;
  ElementSet ideal(iv.size());
  for (int x = 0; x < iv.size(); ++x) {
    if (iv.element(x).position_of(d) == u.position_of(d)) ideal.insert(x);
  }

  for (int x : ideal.members()) {
    const Permutation& xr = reduced.element(to_reduced[x]);
    // Positions i > pivot with x' * (pivot i) inside [u',v'].
    std::vector<int> positions;
    std::vector<int> targets;
    for (int i = pivot + 1; i <= nr; ++i) {
      const auto y = reduced.index_of(xr.right_multiply({pivot, i}));
      if (!y) continue;
      positions.push_back(i);
      targets.push_back(from_reduced[*y]);
    }
    std::vector<int> frontier = targets;
    std::sort(frontier.begin(), frontier.end());
    auto slot_of = [&](int element) {
      return static_cast<int>(std::lower_bound(frontier.begin(), frontier.end(), element) -
                              frontier.begin());
    };

    std::vector<std::pair<std::uint64_t, int>> images;
    const std::size_t m = positions.size();
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << m); ++sel) {
      // Antichains: positions i_1 < ... < i_k with x'(i_1) > ... > x'(i_k).
      std::vector<int> cycle{pivot};
      std::uint64_t mask = 0;
      bool decreasing = true;
      int last_value = nr + 1;
      for (std::size_t k = 0; k < m; ++k) {
        if (!(sel >> k & 1U)) continue;
        const int value = xr(positions[k]);
        if (value > last_value) decreasing = false;
        last_value = value;
        cycle.push_back(positions[k]);
        mask |= std::uint64_t{1} << slot_of(targets[k]);
      }
      if (!decreasing) continue;
      const auto img = reduced.index_of(times_cycle(xr, cycle));
      if (!img) {
        throw InternalInvariantError("cycle image leaves the interval at " + iv.element(x).to_string());
      }
      images.emplace_back(mask, from_reduced[*img]);
    }
    out.hcd.clusters.emplace_back(x, std::move(frontier), std::move(images));
  }

  int z = -1;
  for (int x : ideal.members()) {
    if (z < 0 || iv.rank(x) > iv.rank(z)) z = x;
  }
  if (!(lower_ideal(iv, z) == ideal)) {
    throw InternalInvariantError("standard ideal is not a lower interval [u,z]");
  }
  out.hcd.z = z;
  out.hcd.ideal = std::move(ideal);

  if (validate) {
    const DiamondIndex diamonds(iv);
    if (!is_diamond_closed(diamonds, out.hcd.ideal)) {
      throw InternalInvariantError("standard ideal is not diamond-closed");
    }
    for (const auto& cluster : out.hcd.clusters) {
      const auto built = build_cluster_in(iv, out.hcd.ideal, cluster.base());
      if (!built.ok() || !(*built.cluster == cluster)) {
        throw InternalInvariantError("standard cluster at " + iv.element(cluster.base()).to_string() +
                                     " disagrees with the diamond construction" +
                                     (built.ok() ? "" : std::string(": ") + built.detail));
      }
    }
  }
  return out;
}

QPolynomial htilde(const BruhatInterval& iv, const HypercubeDecomposition& hcd, KLTable& table) {
  QPolynomial total;
  const int top = iv.top_index();
  for (const auto& cluster : hcd.clusters) {
    QPolynomial weight;
    for (const auto& [mask, img] : cluster.images()) {
      if (img == top) weight += QPolynomial::monomial(1, std::popcount(mask));
    }
    if (weight.is_zero()) continue;
    total += weight * table.rtilde(iv.bottom(), iv.element(cluster.base()));
  }
  return total;
}

}  // namespace bruhat
