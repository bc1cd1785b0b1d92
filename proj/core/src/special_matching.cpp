#include "bruhat/hypercube.hpp"

namespace bruhat {

std::vector<std::vector<int>> special_matchings(const BruhatInterval& iv, std::size_t limit) {
  const int count = iv.size();
  std::vector<std::vector<int>> found;
  if (count % 2 != 0) return found;

  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(count),
                                     std::vector<bool>(static_cast<std::size_t>(count), false));
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) leq[a][b] = iv.leq(a, b);
  }

  std::vector<int> match(static_cast<std::size_t>(count), -1);

  // Cover x < y with both partners known: M(x) == y or M(x) < M(y).
  auto cover_ok = [&](int x, int y) {
    if (match[x] < 0 || match[y] < 0) return true;
    return match[x] == y || (match[x] != match[y] && leq[match[x]][match[y]]);
  };
  auto local_ok = [&](int e) {
    for (int y : iv.up_covers(e)) {
      if (!cover_ok(e, y)) return false;
    }
    for (int x : iv.down_covers(e)) {
      if (!cover_ok(x, e)) return false;
    }
    return true;
  };

  // Elements are in rank order, so the first unmatched element has all of
  // its coatoms matched already and must pair with a cover.
  auto search = [&](auto&& self, int from) -> bool {
    int a = from;
    while (a < count && match[a] >= 0) ++a;
    if (a == count) {
      found.push_back(match);
      return limit != 0 && found.size() >= limit;
    }
    for (int b : iv.up_covers(a)) {
      if (match[b] >= 0) continue;
      match[a] = b;
      match[b] = a;
      if (local_ok(a) && local_ok(b) && self(self, a + 1)) return true;
      match[a] = -1;
      match[b] = -1;
    }
    return false;
  };
  search(search, 0);
  return found;
}

}  // namespace bruhat
