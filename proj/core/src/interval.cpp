#include "bruhat/interval.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <unordered_set>

namespace bruhat {

namespace {

// Coatoms of x in S_n: x * (p q) with p < q, x(p) > x(q), and no position
// strictly between holding a value in (x(q), x(p)).
std::vector<Permutation> lower_covers(const Permutation& x) {
  std::vector<Permutation> out;
  const int n = x.degree();
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      if (x(p) < x(q)) continue;
      bool cover = true;
      for (int r = p + 1; r < q && cover; ++r) {
        if (x(r) < x(p) && x(r) > x(q)) cover = false;
      }
      if (cover) out.push_back(x.right_multiply({p, q}));
    }
  }
  return out;
}

}  // namespace

BruhatInterval::BruhatInterval(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree()) throw BruhatError("degree mismatch");
  if (!bruhat_leq(u, v)) {
    throw BruhatError("not comparable: " + u.to_string() + " is not below " + v.to_string() +
                      " in Bruhat order (empty interval)");
  }

  // Descend from v by covers, keeping everything still above u.
  std::unordered_set<Permutation, PermutationHash> seen{v};
  std::deque<Permutation> queue{v};
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (auto& y : lower_covers(x)) {
      if (seen.count(y) || !bruhat_leq(u, y)) continue;
      seen.insert(y);
      queue.push_back(std::move(y));
    }
  }

  const int base = u.length();
  std::vector<std::pair<int, Permutation>> ranked;
  ranked.reserve(seen.size());
  for (const auto& x : seen) ranked.emplace_back(x.length() - base, x);
  std::sort(ranked.begin(), ranked.end());

  elements_.reserve(ranked.size());
  rank_.reserve(ranked.size());
  for (auto& [r, x] : ranked) {
    index_.emplace(x, static_cast<int>(elements_.size()));
    rank_.push_back(r);
    elements_.push_back(std::move(x));
  }

  const int count = size();
  const int n = degree();
  out_.assign(count, {});
  in_.assign(count, {});
  up_covers_.assign(count, {});
  down_covers_.assign(count, {});
  for (int a = 0; a < count; ++a) {
    const Permutation& x = elements_[a];
    for (int p = 1; p <= n; ++p) {
      for (int q = p + 1; q <= n; ++q) {
        if (x(p) > x(q)) continue;
        const auto it = index_.find(x.right_multiply({p, q}));
        if (it == index_.end()) continue;
        const Reflection label(x(p), x(q));
        out_[a].push_back({it->second, label});
        in_[it->second].push_back({a, label});
      }
    }
  }
  auto by_target = [](const Arc& l, const Arc& r) { return l.target < r.target; };
  for (int a = 0; a < count; ++a) {
    std::sort(out_[a].begin(), out_[a].end(), by_target);
    std::sort(in_[a].begin(), in_[a].end(), by_target);
  }
  for (int a = 0; a < count; ++a) {
    for (const Arc& arc : out_[a]) {
      const Edge e{a, arc.target, arc.label};
      bruhat_edges_.push_back(e);
      if (rank_[arc.target] == rank_[a] + 1) {
        hasse_edges_.push_back(e);
        up_covers_[a].push_back(arc.target);
        down_covers_[arc.target].push_back(a);
      }
    }
  }
}

std::optional<int> BruhatInterval::index_of(const Permutation& w) const {
  const auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Reflection> BruhatInterval::edge_label(int from, int to) const {
  const auto& arcs = out_[from];
  const auto it = std::lower_bound(arcs.begin(), arcs.end(), to,
                                   [](const Arc& a, int t) { return a.target < t; });
  if (it == arcs.end() || it->target != to) return std::nullopt;
  return it->label;
}

std::vector<int> BruhatInterval::common_successors(int from_a, int from_b) const {
  std::vector<int> out;
  const auto& a = out_[from_a];
  const auto& b = out_[from_b];
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].target < b[j].target) {
      ++i;
    } else if (b[j].target < a[i].target) {
      ++j;
    } else {
      out.push_back(a[i].target);
      ++i;
      ++j;
    }
  }
  return out;
}

bool BruhatInterval::leq(int a, int b) const {
  if (a == b) return true;
  if (rank_[a] >= rank_[b]) return false;
  return bruhat_leq(elements_[a], elements_[b]);
}

std::vector<Atom> atoms(const BruhatInterval& iv) {
  std::vector<Atom> out;
  const Permutation& u = iv.bottom();
  for (int a : iv.up_covers(iv.bottom_index())) {
    const Reflection t = *iv.edge_label(iv.bottom_index(), a);
    out.push_back({iv.element(a), t, root_of(t, iv.degree())});
    if (u.left_multiply(t) != iv.element(a)) {
      throw InternalInvariantError("atom label does not satisfy a = t u");
    }
  }
  return out;
}

std::vector<int> atom_indices(const BruhatInterval& iv) {
  const auto covers = iv.up_covers(iv.bottom_index());
  return {covers.begin(), covers.end()};
}

std::vector<IntervalKey> enumerate_intervals(int n) {
  auto perms = all_permutations(n);
  std::stable_sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) {
    return a.length() < b.length();
  });
  std::vector<IntervalKey> out;
  for (const auto& v : perms) {
    std::vector<Permutation> below;
    for (const auto& u : perms) {
      if (u.length() <= v.length() && bruhat_leq(u, v)) below.push_back(u);
    }
    std::sort(below.begin(), below.end());
    for (auto& u : below) out.push_back({std::move(u), v});
  }
  return out;
}

AbstractPoset AbstractPoset::from_interval(const BruhatInterval& iv) {
  AbstractPoset p;
  p.size = iv.size();
  p.rank.resize(p.size);
  p.up.resize(p.size);
  p.down.resize(p.size);
  for (int a = 0; a < p.size; ++a) {
    p.rank[a] = iv.rank(a);
    p.up[a].assign(iv.up_covers(a).begin(), iv.up_covers(a).end());
    p.down[a].assign(iv.down_covers(a).begin(), iv.down_covers(a).end());
  }
  return p;
}

std::size_t AbstractPoset::edge_count() const {
  std::size_t total = 0;
  for (const auto& u : up) total += u.size();
  return total;
}

namespace {

// Iterated colour refinement; colours are canonical across posets because
// they are assigned from a shared dictionary of signatures.
std::pair<std::vector<int>, std::vector<int>> refine_colours(const AbstractPoset& p,
                                                             const AbstractPoset& q) {
  std::map<std::vector<int>, int> dictionary;
  auto initial = [&](const AbstractPoset& x) {
    std::vector<int> c(x.size);
    for (int a = 0; a < x.size; ++a) {
      std::vector<int> sig{x.rank[a], static_cast<int>(x.up[a].size()),
                           static_cast<int>(x.down[a].size())};
      c[a] = dictionary.try_emplace(sig, static_cast<int>(dictionary.size())).first->second;
    }
    return c;
  };
  auto cp = initial(p);
  auto cq = initial(q);
  for (int round = 0; round < 8; ++round) {
    std::map<std::vector<int>, int> next;
    auto step = [&](const AbstractPoset& x, const std::vector<int>& c) {
      std::vector<int> out(x.size);
      for (int a = 0; a < x.size; ++a) {
        std::vector<int> ups;
        std::vector<int> downs;
        for (int b : x.up[a]) ups.push_back(c[b]);
        for (int b : x.down[a]) downs.push_back(c[b]);
        std::sort(ups.begin(), ups.end());
        std::sort(downs.begin(), downs.end());
        std::vector<int> sig{c[a], -1};
        sig.insert(sig.end(), ups.begin(), ups.end());
        sig.push_back(-2);
        sig.insert(sig.end(), downs.begin(), downs.end());
        out[a] = next.try_emplace(sig, static_cast<int>(next.size())).first->second;
      }
      return out;
    };
    auto np = step(p, cp);
    auto nq = step(q, cq);
    const bool stable = next.size() == dictionary.size();
    cp = std::move(np);
    cq = std::move(nq);
    dictionary.clear();
    for (auto& [k, v] : next) dictionary.emplace(k, v);
    if (stable) break;
  }
  return {cp, cq};
}

bool adjacent(const AbstractPoset& p, int a, int b) {
  return std::find(p.up[a].begin(), p.up[a].end(), b) != p.up[a].end();
}

}  // namespace

std::optional<std::vector<int>> poset_isomorphic(const AbstractPoset& p, const AbstractPoset& q) {
  if (p.size != q.size || p.edge_count() != q.edge_count()) return std::nullopt;
  if (p.size == 0) return std::vector<int>{};

  auto [cp, cq] = refine_colours(p, q);
  {
    auto sp = cp;
    auto sq = cq;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return std::nullopt;
  }

  // Visit p in rank order so every non-minimal vertex has a mapped down-cover.
  std::vector<int> order(p.size);
  for (int a = 0; a < p.size; ++a) order[a] = a;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return p.rank[a] < p.rank[b]; });

  std::vector<int> forward(p.size, -1);
  std::vector<int> backward(q.size, -1);

  auto consistent = [&](int a, int b) {
    if (cp[a] != cq[b]) return false;
    for (int c : p.down[a]) {
      if (forward[c] >= 0 && !adjacent(q, forward[c], b)) return false;
    }
    for (int c : p.up[a]) {
      if (forward[c] >= 0 && !adjacent(q, b, forward[c])) return false;
    }
    for (int d : q.down[b]) {
      if (backward[d] >= 0 && !adjacent(p, backward[d], a)) return false;
    }
    for (int d : q.up[b]) {
      if (backward[d] >= 0 && !adjacent(p, a, backward[d])) return false;
    }
    return true;
  };

  auto candidates = [&](int a) {
    std::vector<int> out;
    for (int c : p.down[a]) {
      if (forward[c] >= 0) {
        for (int b : q.up[forward[c]]) {
          if (backward[b] < 0) out.push_back(b);
        }
        return out;
      }
    }
    for (int b = 0; b < q.size; ++b) {
      if (backward[b] < 0 && q.rank[b] == p.rank[a]) out.push_back(b);
    }
    return out;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const int a = order[depth];
    for (int b : candidates(a)) {
      if (!consistent(a, b)) continue;
      forward[a] = b;
      backward[b] = a;
      if (self(self, depth + 1)) return true;
      forward[a] = -1;
      backward[b] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;

  for (int a = 0; a < p.size; ++a) {
    if (p.rank[a] != q.rank[forward[a]]) return std::nullopt;
    for (int b : p.up[a]) {
      if (!adjacent(q, forward[a], forward[b])) {
        throw InternalInvariantError("poset isomorphism search returned a non-isomorphism");
      }
    }
  }
  return forward;
}

std::size_t poset_invariant(const AbstractPoset& p) {
  // Rank profile plus the sorted (rank, up, down) degree multiset.
  std::vector<std::array<int, 3>> sig;
  sig.reserve(p.size);
  for (int a = 0; a < p.size; ++a) {
    sig.push_back({p.rank[a], static_cast<int>(p.up[a].size()), static_cast<int>(p.down[a].size())});
  }
  std::sort(sig.begin(), sig.end());
  std::size_t h = static_cast<std::size_t>(p.size) * 0x9e3779b97f4a7c15ULL;
  for (const auto& s : sig) {
    for (int x : s) h = (h ^ static_cast<std::size_t>(x + 1)) * 0x100000001b3ULL;
  }
  return h;
}

}  // namespace bruhat
