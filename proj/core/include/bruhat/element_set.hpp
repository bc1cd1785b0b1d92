#pragma once

#include <cstddef>
#include <vector>

namespace bruhat {

/// Subset of an interval's dense element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe) : bits_(static_cast<std::size_t>(universe), false) {}
  ElementSet(int universe, const std::vector<int>& members) : ElementSet(universe) {
    for (int m : members) insert(m);
  }

  [[nodiscard]] int universe() const { return static_cast<int>(bits_.size()); }
  [[nodiscard]] bool contains(int idx) const { return bits_[idx]; }
  /// Returns true if idx was not already present.
  bool insert(int idx) {
    if (bits_[idx]) return false;
    bits_[idx] = true;
    ++count_;
    return true;
  }
  [[nodiscard]] int size() const { return count_; }
  [[nodiscard]] bool empty() const { return count_ == 0; }

  [[nodiscard]] std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count_));
    for (int k = 0; k < universe(); ++k) {
      if (bits_[k]) out.push_back(k);
    }
    return out;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.bits_ == b.bits_; }

 private:
  std::vector<bool> bits_;
  int count_ = 0;
};

}  // namespace bruhat
