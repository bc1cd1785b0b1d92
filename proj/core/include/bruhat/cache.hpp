#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include "bruhat/kl.hpp"
#include "bruhat/permutation.hpp"
#include "bruhat/polynomial.hpp"

namespace bruhat {

/// Append-only store of Rtilde coefficient arrays keyed by (n, u, v).
///
/// One line per entry: "n u v c0 c1 ... ck". Existing lines are loaded on
/// open; new values are appended as they are computed. The store only
/// short-circuits work and never decides a verification outcome.
class RtildeCache {
 public:
  explicit RtildeCache(std::filesystem::path path);

  [[nodiscard]] std::optional<QPolynomial> lookup(const Permutation& u, const Permutation& v) const;
  void record(const Permutation& u, const Permutation& v, const QPolynomial& rtilde);

  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] const std::filesystem::path& path() const { return path_; }

  /// Wires this cache into `table` as its Rtilde backing store.
  void attach(KLTable& table);

 private:
  using Key = std::tuple<int, std::string, std::string>;

  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::map<Key, QPolynomial> entries_;
  std::ofstream out_;
};

/// BRUHAT_CACHE when set, otherwise `fallback`.
[[nodiscard]] std::optional<std::filesystem::path> resolve_cache_path(
    const std::optional<std::filesystem::path>& fallback);

}  // namespace bruhat
