#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "bruhat/element_set.hpp"
#include "bruhat/interval.hpp"
#include "bruhat/permutation.hpp"
#include "bruhat/polynomial.hpp"

namespace bruhat {

/// A total order on the reflections of S_n such that for every a < b < c,
/// (a c) sits between (a b) and (b c).
class ReflectionOrder {
 public:
  /// Throws BruhatError unless seq is a reflection order on all of T.
  explicit ReflectionOrder(std::vector<Reflection> seq);

  /// (1 2) < (1 3) < ... < (1 n) < (2 3) < ...
  static ReflectionOrder lexicographic(int n);
  /// (1 2) < (1 3) < (2 3) < (1 4) < (2 4) < (3 4) < ...
  static ReflectionOrder colexicographic(int n);

  [[nodiscard]] int degree() const { return n_; }
  [[nodiscard]] std::span<const Reflection> ordered() const { return ordered_; }
  /// 0-based rank of t, smallest first.
  [[nodiscard]] int position_of(Reflection t) const {
    return position_[t.index(static_cast<int>(n_))];
  }
  [[nodiscard]] bool precedes(Reflection a, Reflection b) const {
    return position_of(a) < position_of(b);
  }
  [[nodiscard]] ReflectionOrder reversed() const;

  friend bool operator==(const ReflectionOrder& a, const ReflectionOrder& b) {
    return a.ordered_ == b.ordered_;
  }

 private:
  int n_ = 0;
  std::vector<Reflection> ordered_;
  std::vector<int> position_;
};

/// True iff seq satisfies the triple condition. Throws BruhatError when seq
/// is not a permutation of the reflections of S_n for some n.
[[nodiscard]] bool validate_reflection_order(std::span<const Reflection> seq);

/// Orders T by F1(alpha_t) / F2(alpha_t) with F2(e_k) = n - k. f1 holds the
/// values F1(e_1), ..., F1(e_n). Throws BruhatError if the ratio is not
/// injective.
[[nodiscard]] ReflectionOrder functional_order(int n, std::span<const mpq_class> f1);

/// A reflection order with t_1 < ... < t_k in which the reflections whose
/// roots lie in span(alpha_{t_1}, ..., alpha_{t_i}) form an interval and
/// precede every reflection of span(t_1..t_k) with non-negative coordinates
/// on alpha_{t_{i+1}}, ..., alpha_{t_k}. 0 <= i <= k. Throws BruhatError for
/// dependent roots or i out of range.
[[nodiscard]] ReflectionOrder construct_order(int n, std::span<const Reflection> ts,
                                              std::size_t i);

/// The order built from t = (d+1 d+2), ..., (n-1 n), then (1 2), ..., (d d+1)
/// with the first n-1-d spanning the standard ideal; it has property (E)
/// for the standard decomposition with smallest disagreeing value d.
[[nodiscard]] ReflectionOrder standard_order(int n, int d);

/// Every reflection order of S_n (n <= 5), lexicographic by sequence.
[[nodiscard]] std::vector<ReflectionOrder> all_reflection_orders(int n);

/// A reflection order from a random generic functional.
[[nodiscard]] ReflectionOrder random_reflection_order(int n, std::mt19937_64& rng);

/// Sum of q^(path length) over directed paths u -> v in Gamma(u,v) whose
/// labels strictly increase under `order`.
[[nodiscard]] QPolynomial rtilde_by_paths(const BruhatInterval& iv, const ReflectionOrder& order);

struct EFlags {
  bool e1 = false;
  bool e2 = false;
  bool e = false;
};

/// Checks (E1), (E2) and (E) of `order` relative to the lower set `ideal`.
/// Throws BruhatError when ideal is not a lower set.
[[nodiscard]] EFlags check_E_properties(const BruhatInterval& iv, const ElementSet& ideal,
                                        const ReflectionOrder& order);

/// Rank of integer vectors over the rationals.
[[nodiscard]] std::size_t rational_rank(const std::vector<std::vector<int>>& vectors);

}  // namespace bruhat
