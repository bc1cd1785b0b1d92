#include "bruhat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace bruhat {

Reflection::Reflection(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
  if (a == b || i < 1) {
    throw BruhatError("reflection needs two distinct indices >= 1, got (" +
                      std::to_string(a) + " " + std::to_string(b) + ")");
  }
}

std::size_t Reflection::index(int n) const {
  // Row i contributes n - i entries.
  std::size_t idx = 0;
  for (int r = 1; r < i; ++r) idx += static_cast<std::size_t>(n - r);
  return idx + static_cast<std::size_t>(j - i - 1);
}

Reflection Reflection::from_index(std::size_t idx, int n) {
  for (int r = 1; r < n; ++r) {
    const auto row = static_cast<std::size_t>(n - r);
    if (idx < row) return {r, r + 1 + static_cast<int>(idx)};
    idx -= row;
  }
  throw BruhatError("reflection index out of range");
}

std::string Reflection::to_string() const {
  return "(" + std::to_string(i) + " " + std::to_string(j) + ")";
}

Permutation::Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int e : entries_) {
    if (e < 1 || e > n || seen[e]) {
      throw BruhatError("not a permutation of 1..n in one-line notation");
    }
    seen[e] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::longest(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) e[k] = n - k;
  return Permutation(std::move(e));
}

Permutation Permutation::transposition(int n, Reflection t) {
  if (t.j > n) throw BruhatError("reflection " + t.to_string() + " not in S_" + std::to_string(n));
  return identity(n).right_multiply(t);
}

Permutation Permutation::parse(std::string_view text) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty()) throw BruhatError("empty permutation");

  std::vector<int> entries;
  if (text.front() == '[') {
    if (text.back() != ']') throw BruhatError("unterminated bracket in '" + std::string(text) + "'");
    std::string body(text.substr(1, text.size() - 2));
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        const int value = std::stoi(item, &used);
        for (std::size_t k = used; k < item.size(); ++k) {
          if (!is_space(item[k])) throw BruhatError("bad entry");
        }
        entries.push_back(value);
      } catch (const std::exception&) {
        throw BruhatError("bad entry '" + item + "' in '" + std::string(text) + "'");
      }
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw BruhatError("bad digit in permutation '" + std::string(text) + "'");
      }
      entries.push_back(c - '0');
    }
  }
  return Permutation(std::move(entries));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(entries_.size());
  for (int k = 0; k < degree(); ++k) inv[entries_[k] - 1] = k + 1;
  return Permutation(std::move(inv));
}

int Permutation::position_of(int value) const {
  const auto it = std::find(entries_.begin(), entries_.end(), value);
  if (it == entries_.end()) throw BruhatError("value not present");
  return static_cast<int>(it - entries_.begin()) + 1;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < entries_.size(); ++a) {
    for (std::size_t b = a + 1; b < entries_.size(); ++b) {
      if (entries_[a] > entries_[b]) ++inv;
    }
  }
  return inv;
}

std::vector<int> Permutation::descent_indices() const {
  std::vector<int> out;
  for (int i = 1; i < degree(); ++i) {
    if (has_descent(i)) out.push_back(i);
  }
  return out;
}

Permutation Permutation::left_multiply(Reflection t) const {
  if (t.j > degree()) throw BruhatError("reflection " + t.to_string() + " exceeds degree");
  Permutation out = *this;
  for (int& e : out.entries_) {
    if (e == t.i) {
      e = t.j;
    } else if (e == t.j) {
      e = t.i;
    }
  }
  return out;
}

Permutation Permutation::right_multiply(Reflection t) const {
  if (t.j > degree()) throw BruhatError("reflection " + t.to_string() + " exceeds degree");
  Permutation out = *this;
  std::swap(out.entries_[t.i - 1], out.entries_[t.j - 1]);
  return out;
}

Permutation Permutation::times_simple(int i) const { return right_multiply({i, i + 1}); }

bool Permutation::is_identity() const {
  for (int k = 0; k < degree(); ++k) {
    if (entries_[k] != k + 1) return false;
  }
  return true;
}

std::uint64_t Permutation::code() const {
  if (degree() > 15) throw BruhatError("code() supports degree <= 15");
  std::uint64_t c = static_cast<std::uint64_t>(degree()) << 60;
  for (int k = 0; k < degree(); ++k) {
    c |= static_cast<std::uint64_t>(entries_[k] - 1) << (4 * k);
  }
  return c;
}

std::string Permutation::to_string() const {
  std::string out;
  if (degree() <= 9) {
    for (int e : entries_) out.push_back(static_cast<char>('0' + e));
    return out;
  }
  out = "[";
  for (int k = 0; k < degree(); ++k) {
    if (k) out += ",";
    out += std::to_string(entries_[k]);
  }
  return out + "]";
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw BruhatError("degree mismatch: S_" + std::to_string(a.degree()) + " vs S_" +
                      std::to_string(b.degree()));
  }
  std::vector<int> out(static_cast<std::size_t>(a.degree()));
  for (int k = 1; k <= a.degree(); ++k) out[k - 1] = a(b(k));
  return Permutation(std::move(out));
}

std::vector<Reflection> descents(const Permutation& w) {
  std::vector<Reflection> out;
  for (int i : w.descent_indices()) out.emplace_back(i, i + 1);
  return out;
}

Root root_of(Reflection t, int n) {
  if (t.j > n) throw BruhatError("reflection " + t.to_string() + " exceeds degree");
  Root r{std::vector<int>(static_cast<std::size_t>(n), 0)};
  r.coefficients[t.i - 1] = 1;
  r.coefficients[t.j - 1] = -1;
  return r;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  const int n = u.degree();
  if (n != v.degree()) {
    throw BruhatError("degree mismatch: S_" + std::to_string(n) + " vs S_" +
                      std::to_string(v.degree()));
  }
  // count[j] = #{a <= prefix : w(a) >= j}; u <= v iff dominated for every prefix.
  std::vector<int> cu(static_cast<std::size_t>(n) + 2, 0);
  std::vector<int> cv(static_cast<std::size_t>(n) + 2, 0);
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= u(k); ++j) ++cu[j];
    for (int j = 1; j <= v(k); ++j) ++cv[j];
    for (int j = 1; j <= n; ++j) {
      if (cu[j] > cv[j]) return false;
    }
  }
  return true;
}

bool reflection_between(const Permutation& x, const Permutation& y, Reflection& out) {
  if (x.degree() != y.degree()) return false;
  int first = 0;
  int second = 0;
  int diffs = 0;
  for (int k = 1; k <= x.degree(); ++k) {
    if (x(k) != y(k)) {
      if (++diffs > 2) return false;
      (diffs == 1 ? first : second) = k;
    }
  }
  if (diffs != 2 || x(first) != y(second) || x(second) != y(first)) return false;
  out = Reflection(x(first), x(second));
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

std::vector<Reflection> all_reflections(int n) {
  std::vector<Reflection> out;
  out.reserve(Reflection::count(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int e : w.entries()) {
    h ^= static_cast<std::size_t>(e);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace bruhat
