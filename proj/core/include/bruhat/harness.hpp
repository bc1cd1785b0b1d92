#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bruhat/interval.hpp"
#include "bruhat/kl.hpp"
#include "bruhat/polynomial.hpp"

namespace bruhat {

struct ZReport {
  std::string z;
  bool strong = false;
  bool improper = false;
  std::string reason;
  std::optional<QPolynomial> htilde;
  /// Htilde against Rtilde; set for strong candidates only.
  std::optional<Comparison> verdict;

  friend bool operator==(const ZReport&, const ZReport&) = default;
};

/// Outcome of analysing one interval. Every strong decomposition must
/// report "equal" or "greater-equal"; anything else is a counterexample.
struct VerificationReport {
  std::string u;
  std::string v;
  int length = 0;
  bool simple = false;
  int d = 0;
  std::vector<std::string> standard_ideal;
  QPolynomial rtilde;
  QPolynomial htilde_standard;
  bool standard_equal = false;
  std::vector<ZReport> z_candidates;
  int strong_count = 0;
  int equalities = 0;
  int strict_inequalities = 0;
  int counterexamples = 0;
  std::optional<double> elapsed_ms;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct AnalysisOptions {
  bool exhaustive_z = false;
  bool timing = false;
};

/// Builds I_st, compares its Htilde with Rtilde, and with exhaustive_z also
/// scans every z for strong decompositions.
[[nodiscard]] VerificationReport analyze_interval(const Permutation& u, const Permutation& v,
                                                  const AnalysisOptions& options, KLTable& table);

[[nodiscard]] std::string report_to_json(const VerificationReport& report, int indent = -1);
[[nodiscard]] VerificationReport report_from_json(std::string_view text);

struct IsoClass {
  /// (u, v) members in report order.
  std::vector<std::pair<std::string, std::string>> members;
  /// Distinct P-polynomials seen in the class, first occurrence order.
  std::vector<QPolynomial> p_polys;
  bool contains_simple = false;

  [[nodiscard]] bool p_constant() const { return p_polys.size() <= 1; }
};

struct VerifyOptions {
  int n = 4;
  bool exhaustive_z = false;
  bool iso_classes = false;
  bool timing = false;
  /// Shard k of m (0 <= k < m) by interval index modulo m.
  int shard_index = 0;
  int shard_count = 1;
  /// Keep each interval with this probability, deterministically from seed.
  double sample_fraction = 1.0;
  std::uint64_t seed = 1;
  /// Only intervals with l(u,v) <= max_length when set.
  std::optional<int> max_length;
  std::optional<Permutation> only_u;
  std::optional<Permutation> only_v;
  int threads = 1;
};

struct VerifySummary {
  int intervals = 0;
  int standard_failures = 0;
  int strong_decompositions = 0;
  int strict_inequalities = 0;
  int counterexamples = 0;
  int iso_class_count = 0;
  int iso_violations = 0;
  std::vector<IsoClass> iso_classes;

  /// 0 when every asserted identity holds, 2 otherwise.
  [[nodiscard]] int exit_code() const {
    return standard_failures + counterexamples + iso_violations == 0 ? 0 : 2;
  }
};

/// Intervals of S_n selected by the shard, sample, length and u/v filters,
/// in (l(v), v, u) order.
[[nodiscard]] std::vector<IntervalKey> select_intervals(const VerifyOptions& options);

/// Groups intervals by poset isomorphism type and records the P-polynomials
/// seen in each class.
[[nodiscard]] std::vector<IsoClass> group_iso_classes(const std::vector<IntervalKey>& intervals,
                                                      KLTable& table);

/// Runs the verification; `sink` receives reports in (l(v), v, u) order
/// regardless of thread scheduling.
VerifySummary run_verify(const VerifyOptions& options, KLTable& table,
                         const std::function<void(const VerificationReport&)>& sink);

}  // namespace bruhat
