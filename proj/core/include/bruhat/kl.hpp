#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bruhat/interval.hpp"
#include "bruhat/permutation.hpp"
#include "bruhat/polynomial.hpp"

namespace bruhat {

/// Which right descent the R-recurrence peels off at each step.
enum class DescentChoice { First, Last };

/// Solves t^length * Rtilde(t - 1/t) = R(t^2) for Rtilde, top coefficient
/// first. Throws InternalInvariantError if no solution exists.
[[nodiscard]] QPolynomial rtilde_from_r(const QPolynomial& r, int length);

/// Memo tables for R, Rtilde and P keyed by (u, v). Safe for concurrent use;
/// every entry is a pure function of its key, so results do not depend on
/// which thread filled them.
class KLTable {
 public:
  using Key = std::pair<std::uint64_t, std::uint64_t>;

  /// Optional backing store consulted for Rtilde before computing and told
  /// about every newly computed value.
  struct RtildeStore {
    std::function<std::optional<QPolynomial>(const Permutation&, const Permutation&)> lookup;
    std::function<void(const Permutation&, const Permutation&, const QPolynomial&)> record;
  };

  KLTable() = default;
  KLTable(const KLTable&) = delete;
  KLTable& operator=(const KLTable&) = delete;

  /// R_{u,v}; zero when u is not below v.
  QPolynomial r(const Permutation& u, const Permutation& v);
  /// Rtilde_{u,v} via the substitution identity; requires u <= v.
  QPolynomial rtilde(const Permutation& u, const Permutation& v);
  /// P_{u,v} via the inversion formula over [u,v].
  QPolynomial p(const Permutation& u, const Permutation& v);
  /// P_{x,v} for every x in iv (indexed like iv), v = iv.top().
  std::vector<QPolynomial> p_to_top(const BruhatInterval& iv);

  void set_rtilde_store(RtildeStore store) { store_ = std::move(store); }

  [[nodiscard]] std::size_t r_entries() const;

 private:
  struct KeyHashImpl {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
    }
  };
  using MemoMap = std::unordered_map<Key, QPolynomial, KeyHashImpl>;

  static std::optional<QPolynomial> find(const MemoMap& m, std::shared_mutex& mu, const Key& k);
  static void store(MemoMap& m, std::shared_mutex& mu, const Key& k, const QPolynomial& value);

  mutable std::shared_mutex r_mutex_;
  mutable std::shared_mutex rt_mutex_;
  mutable std::shared_mutex p_mutex_;
  MemoMap r_memo_;
  MemoMap rt_memo_;
  MemoMap p_memo_;
  RtildeStore store_;
};

/// Unmemoized R recursion using the given descent rule throughout; used to
/// check that R does not depend on the descent chosen.
[[nodiscard]] QPolynomial r_poly(const Permutation& u, const Permutation& v,
                                 DescentChoice choice = DescentChoice::First);

/// Convenience wrappers that use a fresh table per call.
[[nodiscard]] QPolynomial kl_poly(const Permutation& u, const Permutation& v);
[[nodiscard]] QPolynomial rtilde_from_r(const Permutation& u, const Permutation& v);

}  // namespace bruhat
