#include <doctest.h>

#include "bruhat/permutation.hpp"
#include "oracles.hpp"

using bruhat::Permutation;
using bruhat::Reflection;

TEST_CASE("parse accepts digit strings and bracketed lists") {
  const auto a = Permutation::parse("21354");
  const auto b = Permutation::parse("[2,1,3,5,4]");
  CHECK(a == b);
  CHECK(a.degree() == 5);
  CHECK(a(4) == 5);
  CHECK(a.to_string() == "21354");
  CHECK(Permutation::parse(" [ 10, 1,2,3,4,5,6,7,8,9 ] ").degree() == 10);
}

TEST_CASE("parse rejects malformed input") {
  for (const char* bad : {"", "1223", "124", "0123", "12a", "[1,2,", "[1,,2]", "[2,3]"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS((void)Permutation::parse(bad), bruhat::BruhatError);
  }
}

TEST_CASE("length counts inversions") {
  CHECK(Permutation::parse("4231").length() == 5);
  CHECK(Permutation::identity(6).length() == 0);
  CHECK(Permutation::longest(6).length() == 15);
  for (const auto& w : bruhat::all_permutations(5)) {
    CHECK(w.length() == oracle::inversions(oracle::raw(w)));
  }
}

TEST_CASE("composition and inverse") {
  const auto w = Permutation::parse("31524");
  CHECK(bruhat::compose(w, w.inverse()).is_identity());
  CHECK(bruhat::compose(w.inverse(), w).is_identity());
  const auto x = Permutation::parse("25143");
  // (x w)(k) = x(w(k))
  const auto xw = bruhat::compose(x, w);
  for (int k = 1; k <= 5; ++k) CHECK(xw(k) == x(w(k)));
  CHECK_THROWS_AS((void)bruhat::compose(w, Permutation::identity(4)), bruhat::BruhatError);
}

TEST_CASE("left multiplication swaps values, right multiplication swaps positions") {
  const auto w = Permutation::parse("2431");
  CHECK(w.left_multiply(Reflection(1, 2)).to_string() == "1432");
  CHECK(w.right_multiply(Reflection(1, 2)).to_string() == "4231");
  CHECK(w.times_simple(3).to_string() == "2413");
  const auto t = Permutation::transposition(4, Reflection(1, 3));
  CHECK(bruhat::compose(t, w) == w.left_multiply(Reflection(1, 3)));
  CHECK(bruhat::compose(w, t) == w.right_multiply(Reflection(1, 3)));
}

TEST_CASE("descents are right descents") {
  const auto w = Permutation::parse("31524");
  CHECK(w.descent_indices() == std::vector<int>{1, 3});
  const auto ds = bruhat::descents(w);
  REQUIRE(ds.size() == 2);
  CHECK(ds[0] == Reflection(1, 2));
  CHECK(ds[1] == Reflection(3, 4));
  for (int i : w.descent_indices()) CHECK(w.times_simple(i).length() == w.length() - 1);
}

TEST_CASE("reflections index lexicographically") {
  CHECK(Reflection(3, 1) == Reflection(1, 3));
  CHECK_THROWS_AS(Reflection(2, 2), bruhat::BruhatError);
  const int n = 5;
  CHECK(bruhat::all_reflections(n).size() == Reflection::count(n));
  std::size_t expected = 0;
  for (const auto& t : bruhat::all_reflections(n)) {
    CHECK(t.index(n) == expected);
    CHECK(Reflection::from_index(expected, n) == t);
    ++expected;
  }
  CHECK(Reflection(2, 4).to_string() == "(2 4)");
}

TEST_CASE("roots are e_i - e_j") {
  const auto r = bruhat::root_of(Reflection(2, 4), 5);
  CHECK(r.coefficients == std::vector<int>{0, 1, 0, -1, 0});
}

TEST_CASE("dominance comparison agrees with reachability in the Bruhat graph") {
  for (int n : {3, 4, 5}) {
    const oracle::ReachabilityOrder order(n);
    const auto perms = bruhat::all_permutations(n);
    for (const auto& a : perms) {
      for (const auto& b : perms) {
        CHECK(bruhat::bruhat_leq(a, b) == order.leq(oracle::raw(a), oracle::raw(b)));
      }
    }
  }
}

TEST_CASE("reflection_between recovers the label of x -> tx") {
  const auto x = Permutation::parse("1324");
  const auto y = x.left_multiply(Reflection(1, 4));
  Reflection t;
  REQUIRE(bruhat::reflection_between(x, y, t));
  CHECK(t == Reflection(1, 4));
  CHECK_FALSE(bruhat::reflection_between(x, Permutation::parse("2413"), t));
}

TEST_CASE("codes distinguish permutations of different degree") {
  CHECK(Permutation::identity(3).code() != Permutation::identity(4).code());
  CHECK(Permutation::parse("213").code() != Permutation::parse("132").code());
}
