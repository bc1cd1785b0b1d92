#include <algorithm>
#include <numeric>

#include "bruhat/hypercube.hpp"
#include "bruhat/reflection_order.hpp"

namespace bruhat {

bool is_simple(const BruhatInterval& iv) {
  std::vector<std::vector<int>> roots;
  for (const Atom& a : atoms(iv)) roots.push_back(a.root.coefficients);
  return rational_rank(roots) == roots.size();
}

std::vector<std::vector<int>> subgroup_blocks(int n, const std::vector<Reflection>& generators) {
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const Reflection t : generators) {
    if (t.j > n) throw BruhatError("generator " + t.to_string() + " exceeds degree");
    parent[root(t.j)] = root(t.i);
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(static_cast<std::size_t>(n) + 1, -1);
  for (int a = 1; a <= n; ++a) {
    const int r = root(a);
    if (block_of[r] < 0) {
      block_of[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of[r]].push_back(a);
  }
  return blocks;
}

ElementSet coset_intersection(const BruhatInterval& iv, const std::vector<Reflection>& generators) {
  const int n = iv.degree();
  const auto blocks = subgroup_blocks(n, generators);
  std::vector<int> block_of(static_cast<std::size_t>(n) + 1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int a : blocks[b]) block_of[a] = static_cast<int>(b);
  }
  // x lies in W'u iff x u^{-1} preserves every block, i.e. x(k) and u(k)
  // share a block at every position k.
  const Permutation& u = iv.bottom();
  ElementSet out(iv.size());
  for (int x = 0; x < iv.size(); ++x) {
    bool inside = true;
    for (int k = 1; k <= n && inside; ++k) inside = block_of[iv.element(x)(k)] == block_of[u(k)];
    if (inside) out.insert(x);
  }
  return out;
}

CosetForm coset_ideal_form(const BruhatInterval& iv, const ElementSet& ideal) {
  if (!is_simple(iv)) throw BruhatError("coset form requires a simple interval");
  if (!ideal.contains(iv.bottom_index()) || !is_lower_set(iv, ideal)) {
    throw BruhatError("coset form requires a nonempty order ideal");
  }
  if (!is_diamond_closed(iv, ideal)) throw BruhatError("coset form requires a diamond-closed ideal");

  CosetForm form;
  for (int a : atom_indices(iv)) {
    if (ideal.contains(a)) form.generators.push_back(*iv.edge_label(iv.bottom_index(), a));
  }
  form.blocks = subgroup_blocks(iv.degree(), form.generators);
  if (!(coset_intersection(iv, form.generators) == ideal)) {
    throw InternalInvariantError("diamond-closed ideal of simple interval " + iv.bottom().to_string() +
                                 ", " + iv.top().to_string() + " is not a coset intersection");
  }
  return form;
}

}  // namespace bruhat
