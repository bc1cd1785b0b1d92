#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "bruhat/permutation.hpp"

namespace bruhat {

/// Directed Bruhat-graph edge between dense element indices, labelled by the
/// reflection t with target = t * source.
struct Edge {
  int source = 0;
  int target = 0;
  Reflection label;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  int target = 0;
  Reflection label;
};

/// The Bruhat interval [u,v] with its Hasse diagram and the induced,
/// reflection-labelled Bruhat graph Gamma(u,v).
///
/// Elements are indexed densely in (rank, one-line lexicographic) order, so
/// index 0 is u and index size()-1 is v. All downstream set machinery
/// (ideals, antichains, clusters) works on these indices.
class BruhatInterval {
 public:
  /// Throws BruhatError("not comparable") when u is not below v.
  BruhatInterval(const Permutation& u, const Permutation& v);

  [[nodiscard]] const Permutation& bottom() const { return elements_.front(); }
  [[nodiscard]] const Permutation& top() const { return elements_.back(); }
  [[nodiscard]] int bottom_index() const { return 0; }
  [[nodiscard]] int top_index() const { return static_cast<int>(elements_.size()) - 1; }
  [[nodiscard]] int degree() const { return bottom().degree(); }
  [[nodiscard]] int size() const { return static_cast<int>(elements_.size()); }
  /// l(u,v).
  [[nodiscard]] int length() const { return rank_.back(); }

  [[nodiscard]] const Permutation& element(int idx) const { return elements_[idx]; }
  [[nodiscard]] std::span<const Permutation> elements() const { return elements_; }
  [[nodiscard]] std::optional<int> index_of(const Permutation& w) const;
  /// l(u,x).
  [[nodiscard]] int rank(int idx) const { return rank_[idx]; }

  [[nodiscard]] std::span<const Edge> hasse_edges() const { return hasse_edges_; }
  [[nodiscard]] std::span<const Edge> bruhat_edges() const { return bruhat_edges_; }

  /// Outgoing Bruhat edges, sorted by target index.
  [[nodiscard]] std::span<const Arc> out_arcs(int idx) const { return out_[idx]; }
  /// Incoming Bruhat edges, arc.target holding the source; sorted by source.
  [[nodiscard]] std::span<const Arc> in_arcs(int idx) const { return in_[idx]; }
  [[nodiscard]] std::span<const int> up_covers(int idx) const { return up_covers_[idx]; }
  [[nodiscard]] std::span<const int> down_covers(int idx) const { return down_covers_[idx]; }

  [[nodiscard]] bool has_edge(int from, int to) const { return edge_label(from, to).has_value(); }
  [[nodiscard]] std::optional<Reflection> edge_label(int from, int to) const;
  /// Elements w with from_a -> w and from_b -> w, ascending.
  [[nodiscard]] std::vector<int> common_successors(int from_a, int from_b) const;

  /// Bruhat order restricted to the interval.
  [[nodiscard]] bool leq(int a, int b) const;

 private:
  std::vector<Permutation> elements_;
  std::vector<int> rank_;
  std::unordered_map<Permutation, int, PermutationHash> index_;
  std::vector<Edge> hasse_edges_;
  std::vector<Edge> bruhat_edges_;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
  std::vector<std::vector<int>> up_covers_;
  std::vector<std::vector<int>> down_covers_;
};

[[nodiscard]] inline BruhatInterval build_interval(const Permutation& u, const Permutation& v) {
  return BruhatInterval(u, v);
}

struct Atom {
  Permutation element;
  Reflection reflection;
  Root root;
};

/// Elements covering u, with t = a u^{-1} and alpha_t.
[[nodiscard]] std::vector<Atom> atoms(const BruhatInterval& iv);
/// Indices of the atoms, ascending.
[[nodiscard]] std::vector<int> atom_indices(const BruhatInterval& iv);

/// All intervals [u,v] of S_n with u <= v, sorted by (l(v), v, u).
struct IntervalKey {
  Permutation u;
  Permutation v;
};
[[nodiscard]] std::vector<IntervalKey> enumerate_intervals(int n);

/// Graded poset given by its Hasse diagram; the isomorphism-type abstraction
/// of an interval.
struct AbstractPoset {
  int size = 0;
  std::vector<int> rank;
  std::vector<std::vector<int>> up;    // up[a]: elements covering a
  std::vector<std::vector<int>> down;  // down[b]: elements covered by b

  [[nodiscard]] static AbstractPoset from_interval(const BruhatInterval& iv);
  [[nodiscard]] std::size_t edge_count() const;
};

/// A rank-preserving order isomorphism p -> q (element i of p maps to
/// result[i]) when one exists.
[[nodiscard]] std::optional<std::vector<int>> poset_isomorphic(const AbstractPoset& p,
                                                               const AbstractPoset& q);

/// Hash of isomorphism-invariant data; equal for isomorphic posets.
[[nodiscard]] std::size_t poset_invariant(const AbstractPoset& p);

}  // namespace bruhat
