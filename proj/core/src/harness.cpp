#include "bruhat/harness.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "bruhat/hypercube.hpp"
#include "io_json.hpp"

namespace bruhat {

VerificationReport analyze_interval(const Permutation& u, const Permutation& v,
                                    const AnalysisOptions& options, KLTable& table) {
  const auto start = std::chrono::steady_clock::now();
  const BruhatInterval iv(u, v);
  VerificationReport report;
  report.u = u.to_string();
  report.v = v.to_string();
  report.length = iv.length();
  report.simple = is_simple(iv);
  report.rtilde = table.rtilde(u, v);

  if (u != v) {
    const auto st = standard_hcd(iv);
    report.d = st.d;
    for (int x : st.hcd.ideal.members()) report.standard_ideal.push_back(iv.element(x).to_string());
    report.htilde_standard = htilde(iv, st.hcd, table);
    report.standard_equal = report.htilde_standard == report.rtilde;
  } else {
    // [u,u] has no standard decomposition; its only decomposition is itself.
    report.htilde_standard = report.rtilde;
    report.standard_equal = true;
  }

  if (options.exhaustive_z) {
    for (auto& cand : enumerate_strong_hcds(iv)) {
      ZReport z;
      z.z = iv.element(cand.z).to_string();
      z.strong = cand.check.strong;
      z.improper = cand.check.improper;
      z.reason = cand.check.reason;
      if (z.strong) {
        ++report.strong_count;
        z.htilde = htilde(iv, *cand.check.decomposition, table);
        z.verdict = compare_coefficientwise(*z.htilde, report.rtilde);
        switch (*z.verdict) {
          case Comparison::Equal:
            ++report.equalities;
            break;
          case Comparison::GreaterEqual:
            ++report.strict_inequalities;
            break;
          default:
            ++report.counterexamples;
        }
      }
      report.z_candidates.push_back(std::move(z));
    }
  }
  if (options.timing) {
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

std::string report_to_json(const VerificationReport& r, int indent) {
  nlohmann::json j;
  j["u"] = r.u;
  j["v"] = r.v;
  j["length"] = r.length;
  j["simple"] = r.simple;
  j["d"] = r.d;
  j["standard_ideal"] = r.standard_ideal;
  j["rtilde"] = polynomial_json(r.rtilde);
  j["htilde_standard"] = polynomial_json(r.htilde_standard);
  j["standard_equal"] = r.standard_equal;
  auto zs = nlohmann::json::array();
  for (const auto& z : r.z_candidates) {
    nlohmann::json zj;
    zj["z"] = z.z;
    zj["strong"] = z.strong;
    zj["improper"] = z.improper;
    if (!z.reason.empty()) zj["reason"] = z.reason;
    if (z.htilde) zj["htilde"] = polynomial_json(*z.htilde);
    if (z.verdict) zj["verdict"] = to_string(*z.verdict);
    zs.push_back(std::move(zj));
  }
  j["z_candidates"] = std::move(zs);
  j["strong_count"] = r.strong_count;
  j["equalities"] = r.equalities;
  j["strict_inequalities"] = r.strict_inequalities;
  j["counterexamples"] = r.counterexamples;
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j.dump(indent);
}

namespace {

Comparison comparison_from_string(const std::string& s) {
  for (Comparison c : {Comparison::Equal, Comparison::LessEqual, Comparison::GreaterEqual,
                       Comparison::Incomparable}) {
    if (s == to_string(c)) return c;
  }
  throw BruhatError("unknown verdict '" + s + "'");
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

VerificationReport report_from_json(std::string_view text) {
  const auto j = parse_json(text);
  try {
    VerificationReport r;
    r.u = j.at("u").get<std::string>();
    r.v = j.at("v").get<std::string>();
    r.length = j.at("length").get<int>();
    r.simple = j.at("simple").get<bool>();
    r.d = j.at("d").get<int>();
    r.standard_ideal = j.at("standard_ideal").get<std::vector<std::string>>();
    r.rtilde = polynomial_from_json_value(j.at("rtilde"));
    r.htilde_standard = polynomial_from_json_value(j.at("htilde_standard"));
    r.standard_equal = j.at("standard_equal").get<bool>();
    for (const auto& zj : j.at("z_candidates")) {
      ZReport z;
      z.z = zj.at("z").get<std::string>();
      z.strong = zj.at("strong").get<bool>();
      z.improper = zj.at("improper").get<bool>();
      if (zj.contains("reason")) z.reason = zj["reason"].get<std::string>();
      if (zj.contains("htilde")) z.htilde = polynomial_from_json_value(zj["htilde"]);
      if (zj.contains("verdict")) z.verdict = comparison_from_string(zj["verdict"].get<std::string>());
      r.z_candidates.push_back(std::move(z));
    }
    r.strong_count = j.at("strong_count").get<int>();
    r.equalities = j.at("equalities").get<int>();
    r.strict_inequalities = j.at("strict_inequalities").get<int>();
    r.counterexamples = j.at("counterexamples").get<int>();
    if (j.contains("elapsed_ms")) r.elapsed_ms = j["elapsed_ms"].get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw BruhatError(std::string("malformed report JSON: ") + e.what());
  }
}

std::vector<IntervalKey> select_intervals(const VerifyOptions& options) {
  if (options.n < 1) throw BruhatError("degree must be positive");
  if (options.shard_count < 1 || options.shard_index < 0 ||
      options.shard_index >= options.shard_count) {
    throw BruhatError("shard must be k/m with 0 <= k < m");
  }
  std::vector<IntervalKey> out;
  const auto all = enumerate_intervals(options.n);
  for (std::size_t idx = 0; idx < all.size(); ++idx) {
    const auto& key = all[idx];
    if (key.u == key.v) continue;
    if (static_cast<int>(idx % static_cast<std::size_t>(options.shard_count)) != options.shard_index) continue;
    if (options.only_u && key.u != *options.only_u) continue;
    if (options.only_v && key.v != *options.only_v) continue;
    if (options.max_length && key.v.length() - key.u.length() > *options.max_length) continue;
    if (options.sample_fraction < 1.0) {
      const double draw = static_cast<double>(splitmix(options.seed ^ splitmix(idx)) >> 11) /
                          static_cast<double>(std::uint64_t{1} << 53);
      if (draw >= options.sample_fraction) continue;
    }
    out.push_back(key);
  }
  return out;
}

std::vector<IsoClass> group_iso_classes(const std::vector<IntervalKey>& intervals, KLTable& table) {
  std::vector<IsoClass> classes;
  std::vector<AbstractPoset> representatives;
  std::map<std::size_t, std::vector<std::size_t>> buckets;
  for (const auto& key : intervals) {
    const BruhatInterval iv(key.u, key.v);
    AbstractPoset poset = AbstractPoset::from_interval(iv);
    auto& bucket = buckets[poset_invariant(poset)];
    std::size_t cls = classes.size();
    for (std::size_t c : bucket) {
      if (poset_isomorphic(poset, representatives[c])) {
        cls = c;
        break;
      }
    }
    if (cls == classes.size()) {
      classes.emplace_back();
      representatives.push_back(std::move(poset));
      bucket.push_back(cls);
    }
    IsoClass& target = classes[cls];
    target.members.emplace_back(key.u.to_string(), key.v.to_string());
    target.contains_simple = target.contains_simple || is_simple(iv);
    const QPolynomial p = table.p_to_top(iv)[iv.bottom_index()];
    bool seen = false;
    for (const auto& existing : target.p_polys) seen = seen || existing == p;
    if (!seen) target.p_polys.push_back(p);
  }
  return classes;
}

VerifySummary run_verify(const VerifyOptions& options, KLTable& table,
                         const std::function<void(const VerificationReport&)>& sink) {
  const auto intervals = select_intervals(options);
  const AnalysisOptions analysis{options.exhaustive_z, options.timing};

  std::vector<std::optional<VerificationReport>> reports(intervals.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= intervals.size()) return;
      try {
        reports[idx] = analyze_interval(intervals[idx].u, intervals[idx].v, analysis, table);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = intervals.size();
        return;
      }
    }
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  VerifySummary summary;
  for (auto& report : reports) {
    ++summary.intervals;
    if (!report->standard_equal) ++summary.standard_failures;
    summary.strong_decompositions += report->strong_count;
    summary.strict_inequalities += report->strict_inequalities;
    summary.counterexamples += report->counterexamples;
    if (sink) sink(*report);
  }
  if (options.iso_classes) {
    summary.iso_classes = group_iso_classes(intervals, table);
    summary.iso_class_count = static_cast<int>(summary.iso_classes.size());
    for (const auto& cls : summary.iso_classes) {
      if (!cls.p_constant()) ++summary.iso_violations;
    }
  }
  return summary;
}

}  // namespace bruhat
