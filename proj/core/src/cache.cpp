#include "bruhat/cache.hpp"

#include <cstdlib>
#include <sstream>

namespace bruhat {

namespace {

bool is_permutation_of(const std::string& s, int n) {
  try {
    return Permutation::parse(s).degree() == n;
  } catch (const BruhatError&) {
    return false;
  }
}

}  // namespace

RtildeCache::RtildeCache(std::filesystem::path path) : path_(std::move(path)) {
  bool needs_newline = false;
  if (std::ifstream in{path_, std::ios::binary}) {
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    needs_newline = !text.empty() && text.back() != '\n';
    std::size_t pos = 0;
    // Only newline-terminated lines count; a torn tail from an interrupted
    // run is ignored.
    for (std::size_t nl; (nl = text.find('\n', pos)) != std::string::npos; pos = nl + 1) {
      std::istringstream ss(text.substr(pos, nl - pos));
      int n = 0;
      std::string u;
      std::string v;
      if (!(ss >> n >> u >> v) || n < 1 || !is_permutation_of(u, n) || !is_permutation_of(v, n)) continue;
      std::vector<mpz_class> coeffs;
      std::string c;
      bool ok = true;
      while (ok && ss >> c) {
        mpz_class value;
        ok = value.set_str(c, 10) == 0;
        coeffs.push_back(std::move(value));
      }
      if (ok && !coeffs.empty()) entries_[{n, u, v}] = QPolynomial(std::move(coeffs));
    }
  }
  out_.open(path_, std::ios::app);
  if (!out_) throw BruhatError("cannot open cache file " + path_.string());
  if (needs_newline) out_ << '\n';
}

std::optional<QPolynomial> RtildeCache::lookup(const Permutation& u, const Permutation& v) const {
  std::lock_guard lock(mutex_);
  const auto it = entries_.find({u.degree(), u.to_string(), v.to_string()});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void RtildeCache::record(const Permutation& u, const Permutation& v, const QPolynomial& rtilde) {
  std::lock_guard lock(mutex_);
  Key key{u.degree(), u.to_string(), v.to_string()};
  if (entries_.count(key)) return;
  out_ << u.degree() << ' ' << std::get<1>(key) << ' ' << std::get<2>(key);
  for (const auto& c : rtilde.coefficients()) out_ << ' ' << c.get_str();
  out_ << '\n';
  out_.flush();
  entries_.emplace(std::move(key), rtilde);
}

std::size_t RtildeCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

void RtildeCache::attach(KLTable& table) {
  table.set_rtilde_store({
      [this](const Permutation& u, const Permutation& v) { return lookup(u, v); },
      [this](const Permutation& u, const Permutation& v, const QPolynomial& p) { record(u, v, p); },
  });
}

std::optional<std::filesystem::path> resolve_cache_path(
    const std::optional<std::filesystem::path>& fallback) {
  if (const char* env = std::getenv("BRUHAT_CACHE"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return fallback;
}

}  // namespace bruhat
