#pragma once

// Slow, independent reference implementations. They work on raw one-line
// vectors and share no code with the library beyond the Permutation type
// used to hand results back.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "bruhat/permutation.hpp"
#include "bruhat/polynomial.hpp"

namespace oracle {

using Perm = std::vector<int>;
using Poly = std::vector<long long>;

inline Perm raw(const bruhat::Permutation& p) {
  Perm out;
  for (int k = 1; k <= p.degree(); ++k) out.push_back(p(k));
  return out;
}

inline int inversions(const Perm& w) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) count += w[i] > w[j];
  }
  return count;
}

inline std::vector<Perm> permutations(int n) {
  Perm w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Perm> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// x -> tx for transpositions of values a < b with length increasing.
struct GraphEdge {
  Perm target;
  int a;
  int b;
};

inline std::vector<GraphEdge> up_edges(const Perm& x) {
  std::vector<GraphEdge> out;
  const int n = static_cast<int>(x.size());
  const int lx = inversions(x);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      Perm y = x;
      for (int& e : y) {
        if (e == a) e = b;
        else if (e == b) e = a;
      }
      if (inversions(y) > lx) out.push_back({y, a, b});
    }
  }
  return out;
}

// Bruhat order as reachability in the Bruhat graph.
class ReachabilityOrder {
 public:
  explicit ReachabilityOrder(int n) : perms_(permutations(n)) {
    for (std::size_t i = 0; i < perms_.size(); ++i) index_[perms_[i]] = i;
    const std::size_t m = perms_.size();
    reach_.assign(m, std::vector<bool>(m, false));
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return inversions(perms_[a]) > inversions(perms_[b]);
    });
    for (std::size_t i : order) {
      reach_[i][i] = true;
      for (const auto& e : up_edges(perms_[i])) {
        const std::size_t j = index_.at(e.target);
        for (std::size_t k = 0; k < m; ++k) {
          if (reach_[j][k]) reach_[i][k] = true;
        }
      }
    }
  }
  bool leq(const Perm& a, const Perm& b) const { return reach_[index_.at(a)][index_.at(b)]; }
  const std::vector<Perm>& perms() const { return perms_; }

 private:
  std::vector<Perm> perms_;
  std::map<Perm, std::size_t> index_;
  std::vector<std::vector<bool>> reach_;
};

inline Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trim(out);
}

inline Poly shift_scale(const Poly& a, int shift, long long scale) {
  if (a.empty()) return {};
  Poly out(a.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i + static_cast<std::size_t>(shift)] = scale * a[i];
  return trim(out);
}

inline bruhat::QPolynomial to_q(const Poly& p) {
  std::vector<mpz_class> c;
  for (long long x : p) c.emplace_back(static_cast<long>(x));
  return bruhat::QPolynomial(std::move(c));
}

// Kazhdan-Lusztig polynomials by the classical mu-recursion over left
// descents: for sw < w, v = sw,
//   P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v} - sum_z mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}
// with c = 1 when sx < x, z ranging over sz < z, z < v.
class NaiveKL {
 public:
  explicit NaiveKL(int n) : order_(n) {}

  Poly p(const Perm& x, const Perm& w) {
    if (!order_.leq(x, w)) return {};
    const auto key = std::make_pair(x, w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Poly result;
    if (x == w) {
      result = {1};
    } else {
      const int s = left_descent(w);
      const Perm v = left_simple(w, s);
      const Perm sx = left_simple(x, s);
      const int c = inversions(sx) < inversions(x) ? 1 : 0;
      result = add(shift_scale(p(sx, v), 1 - c, 1), shift_scale(p(x, v), c, 1));
      const int lw = inversions(w);
      for (const Perm& z : order_.perms()) {
        if (z == v || !order_.leq(z, v)) continue;
        if (inversions(left_simple(z, s)) > inversions(z)) continue;
        const long long m = mu(z, v);
        if (m == 0) continue;
        result = add(result, shift_scale(p(x, z), (lw - inversions(z)) / 2, -m));
      }
    }
    memo_[key] = result;
    return result;
  }

  long long mu(const Perm& z, const Perm& v) {
    const int gap = inversions(v) - inversions(z);
    if (gap % 2 == 0) return 0;
    const Poly pz = p(z, v);
    const std::size_t k = static_cast<std::size_t>((gap - 1) / 2);
    return k < pz.size() ? pz[k] : 0;
  }

  const ReachabilityOrder& order() const { return order_; }

 private:
  static int left_descent(const Perm& w) {
    // s_i is a left descent when i+1 appears before i.
    const int n = static_cast<int>(w.size());
    for (int i = 1; i < n; ++i) {
      const auto pi = std::find(w.begin(), w.end(), i);
      const auto pj = std::find(w.begin(), w.end(), i + 1);
      if (pj < pi) return i;
    }
    return 0;
  }
  static Perm left_simple(Perm w, int s) {
    for (int& e : w) {
      if (e == s) e = s + 1;
      else if (e == s + 1) e = s;
    }
    return w;
  }

  ReachabilityOrder order_;
  std::map<std::pair<Perm, Perm>, Poly> memo_;
};

// Sum of q^len over all directed paths u -> v in the Bruhat graph whose
// labels strictly increase under `less`. Plain DFS over every path.
inline Poly increasing_paths(const Perm& u, const Perm& v,
                             const std::function<bool(std::pair<int, int>, std::pair<int, int>)>& less,
                             const ReachabilityOrder& order) {
  Poly out;
  std::function<void(const Perm&, std::optional<std::pair<int, int>>, int)> walk =
      [&](const Perm& x, std::optional<std::pair<int, int>> last, int len) {
        if (x == v) {
          if (out.size() <= static_cast<std::size_t>(len)) out.resize(static_cast<std::size_t>(len) + 1, 0);
          ++out[static_cast<std::size_t>(len)];
          return;
        }
        for (const auto& e : up_edges(x)) {
          if (!order.leq(e.target, v)) continue;
          const std::pair<int, int> label{e.a, e.b};
          if (last && !less(*last, label)) continue;
          walk(e.target, label, len + 1);
        }
      };
  walk(u, std::nullopt, 0);
  return trim(out);
}

// Number of diamonds in Gamma(u,v): unordered pairs of length-2 paths with
// the same endpoints.
inline long long diamond_count(const Perm& u, const Perm& v, const ReachabilityOrder& order) {
  std::vector<Perm> elems;
  for (const Perm& x : order.perms()) {
    if (order.leq(u, x) && order.leq(x, v)) elems.push_back(x);
  }
  long long total = 0;
  for (const Perm& x1 : elems) {
    std::map<Perm, long long> middles;
    for (const auto& e1 : up_edges(x1)) {
      if (!order.leq(e1.target, v)) continue;
      for (const auto& e2 : up_edges(e1.target)) {
        if (order.leq(e2.target, v)) ++middles[e2.target];
      }
    }
    for (const auto& [top, k] : middles) total += k * (k - 1) / 2;
  }
  return total;
}

}  // namespace oracle
