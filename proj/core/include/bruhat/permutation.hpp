#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bruhat {

/// Raised for malformed input: unparsable permutations, degree mismatches,
/// u not below v, and similar caller errors.
class BruhatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an identity that must hold by construction fails. Seeing one
/// means an arithmetic or combinatorial bug, never bad input.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Transposition (i j) with 1 <= i < j <= n.
struct Reflection {
  int i = 1;
  int j = 2;

  Reflection() = default;
  Reflection(int a, int b);

  /// Dense index of (i j) among the n(n-1)/2 reflections of S_n, ordered
  /// lexicographically: (1 2), (1 3), ..., (1 n), (2 3), ...
  [[nodiscard]] std::size_t index(int n) const;
  [[nodiscard]] static Reflection from_index(std::size_t idx, int n);
  [[nodiscard]] static std::size_t count(int n) {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  }
  [[nodiscard]] bool is_simple() const { return j == i + 1; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Reflection&, const Reflection&) = default;
  friend auto operator<=>(const Reflection&, const Reflection&) = default;
};

/// e_i - e_j for the owning reflection (i j).
struct Root {
  std::vector<int> coefficients;

  friend bool operator==(const Root&, const Root&) = default;
};

/// An element of S_n in one-line notation: entry k (0-based) holds w(k+1).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  Permutation(std::initializer_list<int> one_line)
      : Permutation(std::vector<int>(one_line)) {}

  static Permutation identity(int n);
  static Permutation longest(int n);
  /// The transposition (i j) as an element of S_n.
  static Permutation transposition(int n, Reflection t);

  /// Accepts "21354" (digit form, n <= 9) or "[2,1,3,5,4]".
  static Permutation parse(std::string_view text);

  [[nodiscard]] int degree() const { return static_cast<int>(entries_.size()); }
  /// w(k) for 1 <= k <= n.
  [[nodiscard]] int operator()(int k) const { return entries_[k - 1]; }
  [[nodiscard]] std::span<const int> entries() const { return entries_; }

  [[nodiscard]] Permutation inverse() const;
  /// Position of value `value`, i.e. w^{-1}(value).
  [[nodiscard]] int position_of(int value) const;

  /// Number of inversions.
  [[nodiscard]] int length() const;
  /// Indices i with w(i) > w(i+1), i.e. right descents s_i.
  [[nodiscard]] std::vector<int> descent_indices() const;
  [[nodiscard]] bool has_descent(int i) const { return entries_[i - 1] > entries_[i]; }

  /// t * w: swaps the values t.i and t.j.
  [[nodiscard]] Permutation left_multiply(Reflection t) const;
  /// w * t: swaps the entries at positions t.i and t.j.
  [[nodiscard]] Permutation right_multiply(Reflection t) const;
  /// w * s_i.
  [[nodiscard]] Permutation times_simple(int i) const;

  [[nodiscard]] bool is_identity() const;

  /// Compact key, unique among permutations of degree <= 15.
  [[nodiscard]] std::uint64_t code() const;

  /// "21354" when n <= 9, otherwise "[...]".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

/// (a * b)(k) = a(b(k)).
[[nodiscard]] Permutation compose(const Permutation& a, const Permutation& b);

[[nodiscard]] inline int length(const Permutation& w) { return w.length(); }

/// Simple reflections s_i in the right descent set, ascending.
[[nodiscard]] std::vector<Reflection> descents(const Permutation& w);

[[nodiscard]] Root root_of(Reflection t, int n);

/// Bruhat comparison via the sorted-prefix (tableau) criterion.
[[nodiscard]] bool bruhat_leq(const Permutation& u, const Permutation& v);

/// If x and y differ by a single transposition of values, that reflection.
[[nodiscard]] bool reflection_between(const Permutation& x, const Permutation& y,
                                      Reflection& out);

/// All n! permutations in lexicographic order.
[[nodiscard]] std::vector<Permutation> all_permutations(int n);

std::vector<Reflection> all_reflections(int n);

struct PermutationHash {
  std::size_t operator()(const Permutation& w) const noexcept;
};

}  // namespace bruhat

template <>
struct std::hash<bruhat::Permutation> {
  std::size_t operator()(const bruhat::Permutation& w) const noexcept {
    return bruhat::PermutationHash{}(w);
  }
};
