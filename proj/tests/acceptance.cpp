// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance KEY...     run only the named criteria
//
// Exit status is 0 only if every selected criterion passed.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bruhat/harness.hpp"
#include "bruhat/hypercube.hpp"
#include "bruhat/interval.hpp"
#include "bruhat/kl.hpp"
#include "bruhat/reflection_order.hpp"
#include "checks.hpp"

namespace {

using bruhat::BruhatInterval;
using bruhat::Comparison;
using bruhat::Permutation;
using bruhat::QPolynomial;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string key;
  std::string title;
  std::function<Outcome()> run;
};

Permutation perm(const char* s) { return Permutation::parse(s); }

Outcome standard_equality() {
  bruhat::KLTable table;
  std::ostringstream detail;
  int failures = 0;
  for (int n : {4, 5}) {
    int count = 0;
    for (const auto& key : bruhat::enumerate_intervals(n)) {
      if (key.u == key.v) continue;
      const auto r = bruhat::analyze_interval(key.u, key.v, {}, table);
      failures += r.standard_equal ? 0 : 1;
      ++count;
    }
    detail << "S_" << n << ": " << count << " intervals; ";
  }
  detail << failures << " mismatches";
  return {failures == 0, detail.str()};
}

Outcome inequality_conjecture() {
  bruhat::KLTable table;
  bruhat::VerifyOptions s4;
  s4.n = 4;
  s4.exhaustive_z = true;
  const auto a = bruhat::run_verify(s4, table, nullptr);
  bruhat::VerifyOptions s5;
  s5.n = 5;
  s5.exhaustive_z = true;
  const auto b = bruhat::run_verify(s5, table, nullptr);
  std::ostringstream detail;
  detail << "S_4: " << a.intervals << " intervals, " << a.strong_decompositions << " strong decompositions, "
         << a.counterexamples << " counterexamples; S_5: " << b.intervals << " intervals, "
         << b.strong_decompositions << " strong decompositions, " << b.counterexamples << " counterexamples";
  return {a.counterexamples == 0 && b.counterexamples == 0 && a.intervals > 0 && b.intervals > 0, detail.str()};
}

Outcome strict_example() {
  const BruhatInterval iv(perm("132546"), perm("651234"));
  bruhat::KLTable table;
  const auto z = iv.index_of(perm("612345"));
  if (!z) return {false, "612345 not in interval"};
  const auto check = bruhat::is_strong_hcd(iv, *z);
  if (!check.strong) return {false, "[u,z] not strong: " + check.reason};
  const auto rt = table.rtilde(iv.bottom(), iv.top());
  const auto ht = bruhat::htilde(iv, *check.decomposition, table);
  const auto st = bruhat::standard_hcd(iv);
  const auto ht_st = bruhat::htilde(iv, st.hcd, table);
  const bool strict = bruhat::compare_coefficientwise(ht, rt) == Comparison::GreaterEqual && ht != rt;
  std::ostringstream detail;
  detail << "Rtilde = " << rt.to_string() << ", Htilde[u,z] = " << ht.to_string()
         << ", Htilde_st = " << ht_st.to_string();
  return {strict && ht_st == rt, detail.str()};
}

Outcome elementary_example() {
  const BruhatInterval a(perm("1324"), perm("4231"));
  const BruhatInterval b(perm("12345678"), perm("21436587"));
  const auto phi = bruhat::poset_isomorphic(bruhat::AbstractPoset::from_interval(a),
                                            bruhat::AbstractPoset::from_interval(b));
  const bool sa = bruhat::is_simple(a);
  const bool sb = bruhat::is_simple(b);
  std::ostringstream detail;
  detail << "isomorphic = " << (phi ? "true" : "false") << ", simple = " << (sa ? "true" : "false") << " / "
         << (sb ? "true" : "false");
  return {phi.has_value() && !sa && sb, detail.str()};
}

Outcome matching_free_example() {
  const BruhatInterval iv(perm("21354"), perm("52341"));
  const bool simple = bruhat::is_simple(iv);
  const auto ms = bruhat::special_matchings(iv);
  std::ostringstream detail;
  detail << "simple = " << (simple ? "true" : "false") << ", special matchings = " << ms.size();
  return {simple && ms.empty(), detail.str()};
}

Outcome path_oracle() {
  bruhat::KLTable table;
  std::vector<bruhat::ReflectionOrder> orders;
  orders.push_back(bruhat::ReflectionOrder::lexicographic(4));
  const std::vector<mpq_class> f1{mpq_class(5, 3), mpq_class(-2), mpq_class(7, 2), mpq_class(1, 5)};
  orders.push_back(bruhat::functional_order(4, f1));
  std::mt19937_64 rng(314159);
  orders.push_back(bruhat::random_reflection_order(4, rng));
  const std::size_t base = orders.size();
  for (std::size_t k = 0; k < base; ++k) orders.push_back(orders[k].reversed());
  int mismatches = 0;
  int checked = 0;
  for (const auto& key : bruhat::enumerate_intervals(4)) {
    const BruhatInterval iv(key.u, key.v);
    const auto rt = table.rtilde(key.u, key.v);
    for (const auto& order : orders) {
      mismatches += bruhat::rtilde_by_paths(iv, order) == rt ? 0 : 1;
      ++checked;
    }
  }
  std::ostringstream detail;
  detail << checked << " (interval, order) pairs over " << base << " orders and their reversals; " << mismatches
         << " mismatches";
  return {mismatches == 0, detail.str()};
}

Outcome defining_identities() {
  bruhat::KLTable table;
  int bad = 0;
  int pairs = 0;
  for (const auto& key : bruhat::enumerate_intervals(4)) {
    const BruhatInterval iv(key.u, key.v);
    const int len = iv.length();
    QPolynomial rhs;
    for (const auto& a : iv.elements()) rhs = rhs + table.r(key.u, a) * table.p(a, key.v);
    const auto p = table.p(key.u, key.v);
    if (p.mirrored(len) != rhs) ++bad;
    if (len > 0 && 2 * p.degree() > len - 1) ++bad;
    const auto rt = table.rtilde(key.u, key.v);
    if (rt.degree() != len || rt.leading() != 1) ++bad;
    for (int k = 0; k <= rt.degree(); ++k) {
      if (rt[k] < 0 || ((len - k) % 2 != 0 && rt[k] != 0)) ++bad;
    }
    ++pairs;
  }
  std::ostringstream detail;
  detail << pairs << " comparable pairs; " << bad << " violations";
  return {bad == 0, detail.str()};
}

Outcome lemma_suite() {
  const auto orders = bruhat::all_reflection_orders(4);
  std::mt19937_64 rng(271828);
  int flip = 0;
  int chains = 0;
  int closure = 0;
  int coset = 0;
  int simple = 0;
  for (const auto& key : bruhat::enumerate_intervals(4)) {
    const BruhatInterval iv(key.u, key.v);
    for (int k = 0; k < 4; ++k) flip += checks::diamond_label_violations(iv, orders[rng() % orders.size()]);
    if (key.u != key.v) {
      const auto st = bruhat::standard_hcd(iv);
      for (const auto& order : orders) chains += checks::chain_uniqueness_violations(iv, st.hcd, order);
    }
    closure += checks::atom_closure_violations(iv);
    if (bruhat::is_simple(iv)) {
      ++simple;
      coset += checks::coset_form_violations(iv);
    }
  }
  std::ostringstream detail;
  detail << "diamond label order: " << flip << ", unique increasing chain: " << chains
         << ", closure of atoms: " << closure << ", coset form (" << simple << " simple intervals): " << coset
         << " violations";
  return {flip + chains + closure + coset == 0, detail.str()};
}

Outcome invariance_spot_check() {
  bruhat::KLTable table;
  std::vector<bruhat::IntervalKey> s4 = bruhat::enumerate_intervals(4);
  std::vector<bruhat::IntervalKey> s5;
  for (const auto& key : bruhat::enumerate_intervals(5)) {
    if (key.v.length() - key.u.length() <= 4) s5.push_back(key);
  }
  int violations = 0;
  std::ostringstream detail;
  for (const auto* set : {&s4, &s5}) {
    const auto classes = bruhat::group_iso_classes(*set, table);
    int bad = 0;
    for (const auto& cls : classes) bad += cls.p_constant() ? 0 : 1;
    violations += bad;
    detail << set->size() << " intervals in " << classes.size() << " classes, " << bad << " with non-constant P; ";
  }
  return {violations == 0, detail.str()};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"standard-equality", "standard decomposition gives Htilde = Rtilde on all of S_4 and S_5", standard_equality},
      {"inequality", "every strong decomposition has Htilde >= Rtilde (S_4 and S_5, every z)",
       inequality_conjecture},
      {"strict-example", "[132546,651234] with z = 612345 is strong with Htilde > Rtilde, standard equal",
       strict_example},
      {"elementary-example", "[1324,4231] is not simple but isomorphic to simple [12345678,21436587]",
       elementary_example},
      {"no-matchings-example", "[21354,52341] is simple and has no special matchings", matching_free_example},
      {"path-oracle", "increasing-path counts equal Rtilde for three orders and reversals on S_4", path_oracle},
      {"defining-identities", "KL inversion identity, degree bound and Rtilde shape on S_4", defining_identities},
      {"lemma-suite", "diamond labels, unique increasing chains, atom closure, coset form on S_4", lemma_suite},
      {"invariance", "P constant on isomorphism classes (S_4, S_5 length <= 4)", invariance_spot_check},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> wanted(argv + 1, argv + argc);
  for (const auto& w : wanted) {
    bool known = false;
    for (const auto& c : criteria()) known = known || c.key == w;
    if (!known) {
      std::cerr << "unknown criterion '" << w << "'; known:";
      for (const auto& c : criteria()) std::cerr << ' ' << c.key;
      std::cerr << '\n';
      return 1;
    }
  }
  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.key) == wanted.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_pass = all_pass && outcome.pass;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  " << c.key << ": " << c.title << " -- " << outcome.detail
              << " [" << secs << "s]" << std::endl;
  }
  return all_pass ? 0 : 1;
}
