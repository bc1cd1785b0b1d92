// bruhat: command-line front end for the interval engine.
//
// Exit codes: 0 when every asserted identity holds, 2 when a counterexample
// (or a failed identity) is reported, 1 for usage and internal errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "bruhat/cache.hpp"
#include "bruhat/harness.hpp"
#include "bruhat/hypercube.hpp"
#include "bruhat/interval.hpp"
#include "bruhat/io.hpp"
#include "bruhat/kl.hpp"
#include "bruhat/reflection_order.hpp"

namespace {

using bruhat::BruhatInterval;
using bruhat::Permutation;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCounterexample = 2;

struct Session {
  std::optional<std::string> cache_path;
  bool as_json = false;

  std::unique_ptr<bruhat::RtildeCache> cache;
  bruhat::KLTable table;

  void open_cache() {
    std::optional<std::filesystem::path> fallback;
    if (cache_path) fallback = *cache_path;
    if (auto path = bruhat::resolve_cache_path(fallback)) {
      cache = std::make_unique<bruhat::RtildeCache>(*path);
      cache->attach(table);
    }
  }
};

json poly(const bruhat::QPolynomial& p) { return json::parse(bruhat::polynomial_to_json(p)); }

std::vector<std::string> names(const BruhatInterval& iv, const bruhat::ElementSet& set) {
  std::vector<std::string> out;
  for (int x : set.members()) out.push_back(iv.element(x).to_string());
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out + "}";
}

int cmd_kl(Session& s, const std::string& us, const std::string& vs) {
  const auto u = Permutation::parse(us);
  const auto v = Permutation::parse(vs);
  const BruhatInterval iv(u, v);
  const auto p = s.table.p(u, v);
  const auto r = s.table.r(u, v);
  const auto rt = s.table.rtilde(u, v);
  if (s.as_json) {
    json j{{"u", u.to_string()}, {"v", v.to_string()}, {"length", iv.length()},
           {"P", poly(p)},       {"R", poly(r)},       {"Rtilde", poly(rt)}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "P = " << p.to_string() << '\n'
              << "R = " << r.to_string() << '\n'
              << "Rtilde = " << rt.to_string() << '\n';
  }
  return kOk;
}

bruhat::ReflectionOrder pick_order(const std::string& name, int n, std::uint64_t seed) {
  if (name == "lex") return bruhat::ReflectionOrder::lexicographic(n);
  if (name == "colex") return bruhat::ReflectionOrder::colexicographic(n);
  if (name == "random") {
    std::mt19937_64 rng(seed);
    return bruhat::random_reflection_order(n, rng);
  }
  throw bruhat::BruhatError("unknown order '" + name + "' (lex, colex, random)");
}

int cmd_rtilde(Session& s, const std::string& us, const std::string& vs, const std::string& order_name,
               std::uint64_t seed) {
  const auto u = Permutation::parse(us);
  const auto v = Permutation::parse(vs);
  const BruhatInterval iv(u, v);
  const auto from_r = s.table.rtilde(u, v);
  const auto order = pick_order(order_name, u.degree(), seed);
  const auto by_paths = bruhat::rtilde_by_paths(iv, order);
  const bool agree = from_r == by_paths;
  if (s.as_json) {
    json j{{"u", u.to_string()},
           {"v", v.to_string()},
           {"Rtilde", poly(from_r)},
           {"paths", poly(by_paths)},
           {"order", json::parse(bruhat::order_to_json(order))},
           {"agree", agree}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "Rtilde = " << from_r.to_string() << '\n'
              << "increasing paths (" << order_name << ") = " << by_paths.to_string() << '\n';
    if (!agree) std::cout << "MISMATCH\n";
  }
  return agree ? kOk : kCounterexample;
}

bool acceptable(bruhat::Comparison c) {
  return c == bruhat::Comparison::Equal || c == bruhat::Comparison::GreaterEqual;
}

int cmd_hcd(Session& s, const std::string& us, const std::string& vs, const std::optional<std::string>& zs) {
  const auto u = Permutation::parse(us);
  const auto v = Permutation::parse(vs);
  const BruhatInterval iv(u, v);
  const auto rt = s.table.rtilde(u, v);
  const bool simple = bruhat::is_simple(iv);

  if (zs) {
    const auto z = Permutation::parse(*zs);
    const auto zi = iv.index_of(z);
    if (!zi) throw bruhat::BruhatError("z = " + z.to_string() + " is not in the interval");
    const auto check = bruhat::is_strong_hcd(iv, *zi);
    std::optional<bruhat::QPolynomial> ht;
    std::optional<bruhat::Comparison> verdict;
    if (check.strong) {
      ht = bruhat::htilde(iv, *check.decomposition, s.table);
      verdict = bruhat::compare_coefficientwise(*ht, rt);
    }
    if (s.as_json) {
      json j{{"u", u.to_string()}, {"v", v.to_string()}, {"z", z.to_string()}, {"simple", simple},
             {"strong", check.strong}, {"improper", check.improper}, {"Rtilde", poly(rt)}};
      if (!check.reason.empty()) j["reason"] = check.reason;
      if (check.decomposition) {
        j["decomposition"] = json::parse(bruhat::decomposition_to_json(iv, *check.decomposition));
      }
      if (ht) j["Htilde"] = poly(*ht);
      if (verdict) j["verdict"] = bruhat::to_string(*verdict);
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "strong = " << (check.strong ? "true" : "false") << '\n';
      if (check.improper) std::cout << "improper = true\n";
      if (!check.reason.empty()) std::cout << "reason = " << check.reason << '\n';
      if (check.decomposition) std::cout << "ideal = " << join(names(iv, check.decomposition->ideal)) << '\n';
      std::cout << "Rtilde = " << rt.to_string() << '\n';
      if (ht) {
        std::cout << "Htilde = " << ht->to_string() << '\n' << "verdict = " << bruhat::to_string(*verdict) << '\n';
        if (!acceptable(*verdict)) std::cout << "COUNTEREXAMPLE\n";
      }
    }
    return verdict && !acceptable(*verdict) ? kCounterexample : kOk;
  }

  const auto matchings = bruhat::special_matchings(iv).size();
  if (u == v) {
    if (s.as_json) {
      json j{{"u", u.to_string()}, {"v", v.to_string()}, {"simple", simple},
             {"special_matchings", matchings}, {"Rtilde", poly(rt)}};
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "trivial interval; no standard decomposition\n"
                << "simple = " << (simple ? "true" : "false") << '\n'
                << "special matchings = " << matchings << '\n';
    }
    return kOk;
  }
  const auto st = bruhat::standard_hcd(iv);
  const auto ht = bruhat::htilde(iv, st.hcd, s.table);
  const bool equal = ht == rt;
  if (s.as_json) {
    auto j = json::parse(bruhat::decomposition_to_json(iv, st.hcd));
    j["d"] = st.d;
    j["u"] = u.to_string();
    j["v"] = v.to_string();
    j["simple"] = simple;
    j["special_matchings"] = matchings;
    j["Rtilde"] = poly(rt);
    j["Htilde"] = poly(ht);
    j["equal"] = equal;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "d = " << st.d << '\n'
              << "z = " << iv.element(st.hcd.z).to_string() << '\n'
              << "I_st = " << join(names(iv, st.hcd.ideal)) << '\n';
    for (const auto& c : st.hcd.clusters) {
      std::cout << "  cluster " << iv.element(c.base()).to_string() << ":";
      for (const auto& [mask, image] : c.images()) {
        std::vector<std::string> ys;
        for (int y : c.antichain(mask)) ys.push_back(iv.element(y).to_string());
        std::cout << ' ' << join(ys) << "->" << iv.element(image).to_string();
      }
      std::cout << '\n';
    }
    std::cout << "simple = " << (simple ? "true" : "false") << '\n'
              << "special matchings = " << matchings << '\n'
              << "Rtilde = " << rt.to_string() << '\n'
              << "Htilde = " << ht.to_string() << '\n'
              << (equal ? "Htilde == Rtilde" : "Htilde != Rtilde  FAILED") << '\n';
  }
  return equal ? kOk : kCounterexample;
}

int cmd_simple(Session& s, const std::string& us, const std::string& vs) {
  const BruhatInterval iv(Permutation::parse(us), Permutation::parse(vs));
  const bool simple = bruhat::is_simple(iv);
  std::vector<std::string> atoms;
  for (const auto& a : bruhat::atoms(iv)) atoms.push_back(a.element.to_string() + " " + a.reflection.to_string());
  if (s.as_json) {
    std::cout << json{{"simple", simple}, {"atoms", atoms}}.dump() << '\n';
  } else {
    for (const auto& a : atoms) std::cout << "atom " << a << '\n';
    std::cout << "simple = " << (simple ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_matchings(Session& s, const std::string& us, const std::string& vs, std::size_t limit) {
  const BruhatInterval iv(Permutation::parse(us), Permutation::parse(vs));
  const auto ms = bruhat::special_matchings(iv, limit);
  if (s.as_json) {
    json arr = json::array();
    for (const auto& m : ms) {
      json pairs = json::array();
      for (std::size_t a = 0; a < m.size(); ++a) {
        if (static_cast<int>(a) < m[a]) {
          pairs.push_back({iv.element(static_cast<int>(a)).to_string(), iv.element(m[a]).to_string()});
        }
      }
      arr.push_back(std::move(pairs));
    }
    std::cout << json{{"count", ms.size()}, {"matchings", arr}}.dump() << '\n';
  } else {
    std::cout << "special matchings = " << ms.size() << '\n';
  }
  return kOk;
}

int cmd_iso(Session& s, const std::vector<std::string>& args) {
  const BruhatInterval a(Permutation::parse(args[0]), Permutation::parse(args[1]));
  const BruhatInterval b(Permutation::parse(args[2]), Permutation::parse(args[3]));
  const auto iso = bruhat::poset_isomorphic(bruhat::AbstractPoset::from_interval(a),
                                            bruhat::AbstractPoset::from_interval(b));
  if (s.as_json) {
    json j{{"isomorphic", iso.has_value()}};
    if (iso) {
      json map = json::object();
      for (std::size_t x = 0; x < iso->size(); ++x) {
        map[a.element(static_cast<int>(x)).to_string()] = b.element((*iso)[x]).to_string();
      }
      j["map"] = std::move(map);
    }
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "isomorphic = " << (iso ? "true" : "false") << '\n';
    if (iso) {
      for (std::size_t x = 0; x < iso->size(); ++x) {
        std::cout << "  " << a.element(static_cast<int>(x)).to_string() << " -> "
                  << b.element((*iso)[x]).to_string() << '\n';
      }
    }
  }
  return kOk;
}

std::string report_line(const bruhat::VerificationReport& r) {
  std::ostringstream out;
  out << r.u << ' ' << r.v << " l=" << r.length << " d=" << r.d
      << " standard=" << (r.standard_equal ? "equal" : "FAILED");
  if (!r.z_candidates.empty()) {
    out << " strong=" << r.strong_count << " equal=" << r.equalities << " greater=" << r.strict_inequalities;
  }
  if (r.elapsed_ms) out << " ms=" << *r.elapsed_ms;
  for (const auto& z : r.z_candidates) {
    if (z.verdict && *z.verdict == bruhat::Comparison::GreaterEqual) out << "\n  strict at z=" << z.z;
    if (z.verdict && !acceptable(*z.verdict)) {
      out << "\n  COUNTEREXAMPLE at z=" << z.z << ": Htilde = " << z.htilde->to_string()
          << ", Rtilde = " << r.rtilde.to_string();
    }
  }
  return out.str();
}

int cmd_verify(Session& s, bruhat::VerifyOptions opts, const std::string& shard,
               const std::optional<std::string>& only_u, const std::optional<std::string>& only_v) {
  if (!shard.empty()) {
    int k = 0;
    int m = 0;
    char slash = 0;
    std::istringstream in(shard);
    if (!(in >> k >> slash >> m) || slash != '/' || !in.eof()) {
      throw bruhat::BruhatError("--shard expects k/m, got '" + shard + "'");
    }
    opts.shard_index = k;
    opts.shard_count = m;
  }
  if (only_u) opts.only_u = Permutation::parse(*only_u);
  if (only_v) opts.only_v = Permutation::parse(*only_v);

  const auto summary = bruhat::run_verify(opts, s.table, [&](const bruhat::VerificationReport& r) {
    if (s.as_json) {
      std::cout << bruhat::report_to_json(r) << '\n';
    } else {
      std::cout << report_line(r) << '\n';
    }
  });

  if (s.as_json) {
    json j{{"intervals", summary.intervals},
           {"standard_failures", summary.standard_failures},
           {"strong_decompositions", summary.strong_decompositions},
           {"strict_inequalities", summary.strict_inequalities},
           {"counterexamples", summary.counterexamples}};
    if (opts.iso_classes) {
      j["iso_classes"] = summary.iso_class_count;
      j["iso_violations"] = summary.iso_violations;
    }
    std::cout << json{{"summary", j}}.dump() << '\n';
  } else {
    if (opts.iso_classes) {
      for (const auto& cls : summary.iso_classes) {
        if (cls.p_constant()) continue;
        std::cout << "P NOT CONSTANT on class of " << cls.members.front().first << ' '
                  << cls.members.front().second << ':';
        for (const auto& p : cls.p_polys) std::cout << " [" << p.to_string() << ']';
        std::cout << '\n';
      }
    }
    std::cout << "intervals: " << summary.intervals << '\n'
              << "standard failures: " << summary.standard_failures << '\n';
    if (opts.exhaustive_z) {
      std::cout << "strong decompositions: " << summary.strong_decompositions << '\n'
                << "strict inequalities: " << summary.strict_inequalities << '\n'
                << "counterexamples: " << summary.counterexamples << '\n';
    }
    if (opts.iso_classes) {
      std::cout << "isomorphism classes: " << summary.iso_class_count << '\n'
                << "classes with non-constant P: " << summary.iso_violations << '\n';
    }
  }
  return summary.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat intervals in S_n: KL polynomials, hypercube decompositions, verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Session session;
  app.add_option("--cache", session.cache_path, "Rtilde cache file (BRUHAT_CACHE overrides)");
  app.add_flag("--json", session.as_json, "Emit JSON");

  std::string u;
  std::string v;
  auto* kl = app.add_subcommand("kl", "P, R and Rtilde for u <= v");
  kl->add_option("u", u)->required();
  kl->add_option("v", v)->required();

  std::string order_name = "lex";
  std::uint64_t seed = 1;
  auto* rt = app.add_subcommand("rtilde", "Rtilde from R and by counting increasing paths");
  rt->add_option("u", u)->required();
  rt->add_option("v", v)->required();
  rt->add_option("--order", order_name, "lex, colex or random")->capture_default_str();
  rt->add_option("--seed", seed, "Seed for --order random")->capture_default_str();

  std::optional<std::string> z;
  auto* hcd = app.add_subcommand("hcd", "Standard decomposition, or diagnostics for [u,z]");
  hcd->add_option("u", u)->required();
  hcd->add_option("v", v)->required();
  hcd->add_option("z", z);

  bruhat::VerifyOptions vopts;
  std::string shard;
  std::optional<std::string> only_u;
  std::optional<std::string> only_v;
  std::optional<int> max_length;
  auto* verify = app.add_subcommand("verify", "Check every interval of S_n");
  verify->add_option("n", vopts.n)->required()->check(CLI::Range(1, 9));
  verify->add_flag("--exhaustive-z", vopts.exhaustive_z, "Scan all z for strong decompositions");
  verify->add_flag("--iso-classes", vopts.iso_classes, "Check P is constant on isomorphism classes");
  verify->add_option("--shard", shard, "Process shard k of m (0 <= k < m)");
  verify->add_option("--sample", vopts.sample_fraction, "Keep this fraction of intervals")
      ->check(CLI::Range(0.0, 1.0));
  verify->add_option("--seed", vopts.seed, "Sampling seed")->capture_default_str();
  verify->add_option("--max-length", max_length, "Only intervals with l(u,v) <= this");
  verify->add_option("--u", only_u, "Only intervals with this bottom");
  verify->add_option("--v", only_v, "Only intervals with this top");
  verify->add_option("--threads", vopts.threads, "Worker threads")->capture_default_str();
  verify->add_flag("--timing", vopts.timing, "Include per-interval timing");

  auto* simple = app.add_subcommand("simple", "Atoms and simplicity");
  simple->add_option("u", u)->required();
  simple->add_option("v", v)->required();

  std::size_t limit = 0;
  auto* matchings = app.add_subcommand("matchings", "Special matchings of [u,v]");
  matchings->add_option("u", u)->required();
  matchings->add_option("v", v)->required();
  matchings->add_option("--limit", limit, "Stop after this many (0 = all)");

  std::vector<std::string> iso_args;
  auto* iso = app.add_subcommand("iso", "Poset isomorphism between [u1,v1] and [u2,v2]");
  iso->add_option("intervals", iso_args, "u1 v1 u2 v2")->required()->expected(4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    session.open_cache();
    if (*kl) return cmd_kl(session, u, v);
    if (*rt) return cmd_rtilde(session, u, v, order_name, seed);
    if (*hcd) return cmd_hcd(session, u, v, z);
    if (*verify) {
      vopts.max_length = max_length;
      return cmd_verify(session, vopts, shard, only_u, only_v);
    }
    if (*simple) return cmd_simple(session, u, v);
    if (*matchings) return cmd_matchings(session, u, v, limit);
    if (*iso) return cmd_iso(session, iso_args);
  } catch (const bruhat::BruhatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
