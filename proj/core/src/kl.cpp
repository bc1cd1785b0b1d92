#include "bruhat/kl.hpp"

#include <mutex>

namespace bruhat {

namespace {

const QPolynomial kOne{1};
const QPolynomial kQ{0, 1};
const QPolynomial kQMinusOne{-1, 1};

int pick_descent(const Permutation& v, DescentChoice choice) {
  const auto des = v.descent_indices();
  if (des.empty()) throw InternalInvariantError("identity has no descent");
  return choice == DescentChoice::First ? des.front() : des.back();
}

QPolynomial r_plain(const Permutation& u, const Permutation& v, DescentChoice choice) {
  if (u == v) return kOne;
  if (!bruhat_leq(u, v)) return {};
  const int s = pick_descent(v, choice);
  const Permutation vs = v.times_simple(s);
  const Permutation us = u.times_simple(s);
  if (u.has_descent(s)) return r_plain(us, vs, choice);
  return kQ * r_plain(us, vs, choice) + kQMinusOne * r_plain(u, vs, choice);
}

}  // namespace

QPolynomial rtilde_from_r(const QPolynomial& r, int length) {
  if (length < 0) throw InternalInvariantError("negative interval length");
  // Peel t^length * c_k * (t - 1/t)^k off the top of R(t^2) for k = length..0.
  LaurentPolynomial rest = LaurentPolynomial::from_q_squared(r);
  const LaurentPolynomial step(-1, {mpz_class(-1), mpz_class(0), mpz_class(1)});
  std::vector<LaurentPolynomial> powers{LaurentPolynomial::monomial(1, length)};
  for (int k = 1; k <= length; ++k) powers.push_back(powers.back() * step);

  std::vector<mpz_class> coeffs(static_cast<std::size_t>(length) + 1, mpz_class(0));
  for (int k = length; k >= 0; --k) {
    const mpz_class c = rest[length + k];
    if (c == 0) continue;
    coeffs[k] = c;
    rest -= LaurentPolynomial::monomial(c, 0) * powers[k];
  }
  if (!rest.is_zero()) {
    throw InternalInvariantError("R polynomial has no Rtilde preimage of length " +
                                 std::to_string(length) + ": " + r.to_string());
  }
  return QPolynomial(std::move(coeffs));
}

std::optional<QPolynomial> KLTable::find(const MemoMap& m, std::shared_mutex& mu, const Key& k) {
  std::shared_lock lock(mu);
  const auto it = m.find(k);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

void KLTable::store(MemoMap& m, std::shared_mutex& mu, const Key& k, const QPolynomial& value) {
  std::unique_lock lock(mu);
  m.emplace(k, value);
}

QPolynomial KLTable::r(const Permutation& u, const Permutation& v) {
  if (u == v) return kOne;
  const Key key{u.code(), v.code()};
  if (auto hit = find(r_memo_, r_mutex_, key)) return *hit;

  QPolynomial value;
  if (bruhat_leq(u, v)) {
    const int s = pick_descent(v, DescentChoice::First);
    const Permutation vs = v.times_simple(s);
    const Permutation us = u.times_simple(s);
    if (u.has_descent(s)) {
      value = r(us, vs);
    } else {
      value = kQ * r(us, vs) + kQMinusOne * r(u, vs);
    }
  }
  store(r_memo_, r_mutex_, key, value);
  return value;
}

QPolynomial KLTable::rtilde(const Permutation& u, const Permutation& v) {
  if (!bruhat_leq(u, v)) {
    throw BruhatError("not comparable: " + u.to_string() + " is not below " + v.to_string());
  }
  const Key key{u.code(), v.code()};
  if (auto hit = find(rt_memo_, rt_mutex_, key)) return *hit;
  if (store_.lookup) {
    if (auto cached = store_.lookup(u, v)) {
      store(rt_memo_, rt_mutex_, key, *cached);
      return *cached;
    }
  }
  QPolynomial value = rtilde_from_r(r(u, v), v.length() - u.length());
  store(rt_memo_, rt_mutex_, key, value);
  if (store_.record) store_.record(u, v, value);
  return value;
}

std::vector<QPolynomial> KLTable::p_to_top(const BruhatInterval& iv) {
  const int count = iv.size();
  const int top = iv.top_index();
  const std::uint64_t vcode = iv.top().code();
  std::vector<QPolynomial> p(count);
  p[top] = kOne;
  for (int a = top - 1; a >= 0; --a) {
    const Key key{iv.element(a).code(), vcode};
    if (auto hit = find(p_memo_, p_mutex_, key)) {
      p[a] = *hit;
      continue;
    }
    // sum over b > a of R_{a,b} P_{b,v}; the b = a term is P_{a,v} itself.
    QPolynomial sum;
    for (int b = a + 1; b < count; ++b) {
      if (!iv.leq(a, b)) continue;
      sum += r(iv.element(a), iv.element(b)) * p[b];
    }
    const int len = iv.rank(top) - iv.rank(a);
    std::vector<mpz_class> coeffs;
    for (int j = 0; 2 * j < len; ++j) coeffs.push_back(sum[len - j]);
    QPolynomial value(std::move(coeffs));
    if (value.mirrored(len) != value + sum) {
      throw InternalInvariantError("KL inversion identity fails for " + iv.element(a).to_string() +
                                   ", " + iv.top().to_string());
    }
    store(p_memo_, p_mutex_, key, value);
    p[a] = std::move(value);
  }
  return p;
}

QPolynomial KLTable::p(const Permutation& u, const Permutation& v) {
  if (u == v) return kOne;
  if (!bruhat_leq(u, v)) return {};
  const Key key{u.code(), v.code()};
  if (auto hit = find(p_memo_, p_mutex_, key)) return *hit;
  const BruhatInterval iv(u, v);
  return p_to_top(iv)[iv.bottom_index()];
}

std::size_t KLTable::r_entries() const {
  std::shared_lock lock(r_mutex_);
  return r_memo_.size();
}

QPolynomial r_poly(const Permutation& u, const Permutation& v, DescentChoice choice) {
  if (u.degree() != v.degree()) throw BruhatError("degree mismatch");
  return r_plain(u, v, choice);
}

QPolynomial kl_poly(const Permutation& u, const Permutation& v) {
  KLTable table;
  return table.p(u, v);
}

QPolynomial rtilde_from_r(const Permutation& u, const Permutation& v) {
  KLTable table;
  return table.rtilde(u, v);
}

}  // namespace bruhat
