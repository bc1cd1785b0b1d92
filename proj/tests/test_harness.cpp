#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "bruhat/cache.hpp"
#include "bruhat/harness.hpp"

using bruhat::Permutation;
using bruhat::VerificationReport;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  const auto path = std::filesystem::temp_directory_path() / ("bruhat_test_" + name);
  std::filesystem::remove(path);
  return path;
}

std::vector<std::string> run_json(bruhat::VerifyOptions opts, bruhat::KLTable& table) {
  std::vector<std::string> out;
  (void)bruhat::run_verify(opts, table, [&](const VerificationReport& r) { out.push_back(bruhat::report_to_json(r)); });
  return out;
}

}  // namespace

TEST_CASE("report JSON round-trips exactly") {
  bruhat::KLTable table;
  const auto r = bruhat::analyze_interval(Permutation::parse("132546"), Permutation::parse("651234"),
                                          {.exhaustive_z = true, .timing = false}, table);
  const auto text = bruhat::report_to_json(r);
  const auto back = bruhat::report_from_json(text);
  CHECK(back == r);
  CHECK(bruhat::report_to_json(back) == text);
  CHECK(r.strict_inequalities == 1);
  CHECK(r.counterexamples == 0);
  CHECK(r.standard_equal);
  CHECK_THROWS_AS((void)bruhat::report_from_json("{\"u\": 1}"), bruhat::BruhatError);
  CHECK_THROWS_AS((void)bruhat::report_from_json("not json"), bruhat::BruhatError);
}

TEST_CASE("timing is reported only on request") {
  bruhat::KLTable table;
  const auto u = Permutation::parse("1234");
  const auto v = Permutation::parse("4321");
  CHECK_FALSE(bruhat::analyze_interval(u, v, {}, table).elapsed_ms.has_value());
  const auto timed = bruhat::analyze_interval(u, v, {.exhaustive_z = false, .timing = true}, table);
  REQUIRE(timed.elapsed_ms.has_value());
  CHECK(bruhat::report_from_json(bruhat::report_to_json(timed)).elapsed_ms.has_value());
}

TEST_CASE("shards partition the intervals") {
  bruhat::VerifyOptions all;
  all.n = 4;
  const auto full = bruhat::select_intervals(all);
  CHECK(full.size() == 189);
  std::set<std::pair<std::string, std::string>> seen;
  std::size_t total = 0;
  for (int k = 0; k < 3; ++k) {
    auto opts = all;
    opts.shard_index = k;
    opts.shard_count = 3;
    for (const auto& key : bruhat::select_intervals(opts)) {
      seen.insert({key.u.to_string(), key.v.to_string()});
      ++total;
    }
  }
  CHECK(total == full.size());
  CHECK(seen.size() == full.size());
  auto bad = all;
  bad.shard_index = 3;
  bad.shard_count = 3;
  CHECK_THROWS_AS((void)bruhat::select_intervals(bad), bruhat::BruhatError);
}

TEST_CASE("sampling is deterministic in the seed") {
  bruhat::VerifyOptions opts;
  opts.n = 5;
  opts.sample_fraction = 0.05;
  opts.seed = 42;
  const auto a = bruhat::select_intervals(opts);
  const auto b = bruhat::select_intervals(opts);
  CHECK(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].u == b[k].u);
  CHECK(a.size() > 100);
  CHECK(a.size() < 280);
  opts.seed = 43;
  const auto c = bruhat::select_intervals(opts);
  bool differs = c.size() != a.size();
  for (std::size_t k = 0; !differs && k < a.size(); ++k) differs = a[k].u != c[k].u || a[k].v != c[k].v;
  CHECK(differs);
}

TEST_CASE("filters on u, v and length") {
  bruhat::VerifyOptions opts;
  opts.n = 4;
  opts.only_v = Permutation::parse("4321");
  opts.max_length = 2;
  for (const auto& key : bruhat::select_intervals(opts)) {
    CHECK(key.v.to_string() == "4321");
    CHECK(key.v.length() - key.u.length() <= 2);
  }
  opts.only_u = Permutation::parse("3421");
  CHECK(bruhat::select_intervals(opts).size() == 1);
}

TEST_CASE("report stream order does not depend on thread count") {
  bruhat::VerifyOptions opts;
  opts.n = 4;
  opts.exhaustive_z = true;
  bruhat::KLTable serial_table;
  const auto serial = run_json(opts, serial_table);
  opts.threads = 4;
  bruhat::KLTable parallel_table;
  CHECK(run_json(opts, parallel_table) == serial);
}

TEST_CASE("S_4 verification finds no failures and constant P on isomorphism classes") {
  bruhat::VerifyOptions opts;
  opts.n = 4;
  opts.exhaustive_z = true;
  opts.iso_classes = true;
  bruhat::KLTable table;
  const auto summary = bruhat::run_verify(opts, table, nullptr);
  CHECK(summary.intervals == 189);
  CHECK(summary.standard_failures == 0);
  CHECK(summary.counterexamples == 0);
  CHECK(summary.iso_violations == 0);
  CHECK(summary.exit_code() == 0);
  std::size_t members = 0;
  for (const auto& cls : summary.iso_classes) members += cls.members.size();
  CHECK(members == 189);
}

TEST_CASE("reports are identical with and without the cache") {
  const auto path = temp_file("cache_identical.txt");
  bruhat::VerifyOptions opts;
  opts.n = 4;
  opts.exhaustive_z = true;

  bruhat::KLTable plain;
  const auto without = run_json(opts, plain);

  std::size_t stored = 0;
  {
    bruhat::RtildeCache cache(path);
    bruhat::KLTable cached;
    cache.attach(cached);
    CHECK(run_json(opts, cached) == without);
    stored = cache.size();
    CHECK(stored > 0);
  }
  {
    // Second run served from the file.
    bruhat::RtildeCache cache(path);
    CHECK(cache.size() == stored);
    bruhat::KLTable cached;
    cache.attach(cached);
    CHECK(run_json(opts, cached) == without);
    CHECK(cache.size() == stored);
  }
  std::filesystem::remove(path);
}

TEST_CASE("cache loading skips a torn final line") {
  const auto path = temp_file("cache_torn.txt");
  {
    std::ofstream out(path);
    out << "3 123 321 0 1 0 1\n3 123 2";
  }
  bruhat::RtildeCache cache(path);
  CHECK(cache.size() == 1);
  const auto hit = cache.lookup(Permutation::parse("123"), Permutation::parse("321"));
  REQUIRE(hit.has_value());
  CHECK(*hit == bruhat::QPolynomial{0, 1, 0, 1});
  std::filesystem::remove(path);
}

TEST_CASE("the environment variable overrides the cache path") {
  ::unsetenv("BRUHAT_CACHE");
  CHECK(bruhat::resolve_cache_path(std::filesystem::path("a.txt")) == std::filesystem::path("a.txt"));
  CHECK_FALSE(bruhat::resolve_cache_path(std::nullopt).has_value());
  ::setenv("BRUHAT_CACHE", "/tmp/b.txt", 1);
  CHECK(bruhat::resolve_cache_path(std::filesystem::path("a.txt")) == std::filesystem::path("/tmp/b.txt"));
  ::unsetenv("BRUHAT_CACHE");
}
