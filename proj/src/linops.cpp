#include "cherednik/linops.hpp"

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cherednik {

std::string pbw_str(int id) {
  std::ostringstream os;
  const int k = pbw_mode(id), a = pbw_row(id), b = pbw_col(id);
  if (a == kCartan) os << 'I';
  else if (b == kCartan) os << 'H' << a + 1;
  else os << 'E' << a + 1 << b + 1;
  if (k != 0) os << "t^-" << k;
  return os.str();
}

int BasisKey::depth() const {
  int d = 0;
  for (int id : mono) d += pbw_mode(id);
  return d;
}

std::string key_str(const BasisKey& k) {
  std::ostringstream os;
  bool any = false;
  if (!k.x.empty()) {
    os << "x^[";
    for (std::size_t i = 0; i < k.x.size(); ++i) os << (i ? "," : "") << k.x[i];
    os << ']';
    any = true;
  }
  if (!k.word.empty()) {
    os << (any ? " " : "") << "w[";
    for (std::size_t i = 0; i < k.word.size(); ++i) os << (i ? "," : "") << k.word[i] + 1;
    os << ']';
    any = true;
  }
  if (!k.mono.empty()) {
    os << (any ? " " : "") << "pbw[";
    for (std::size_t i = 0; i < k.mono.size(); ++i) os << (i ? "," : "") << pbw_str(k.mono[i]);
    os << ']';
    any = true;
  }
  os << (any ? " " : "") << "u" << k.base + 1;
  return os.str();
}

CheckReport for_each_key(std::span<const BasisKey> keys,
                         const std::function<CheckReport(const BasisKey&)>& fn) {
  const long n = static_cast<long>(keys.size());
  std::vector<CheckReport> parts(n);
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    try {
      parts[i] = fn(keys[i]);
    } catch (...) {
#pragma omp critical(cherednik_for_each_key)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  CheckReport rep;
  for (const auto& p : parts) rep.merge(p);
  return rep;
}

namespace {

std::vector<IntSeq> x_parts(const SpaceDesc& s) {
  std::vector<IntSeq> out;
  if (s.nvars == 0) {
    out.emplace_back();
    return out;
  }
  IntSeq cur(s.nvars, 0);
  if (s.total_degree >= 0) {
    // Nonnegative exponents with sum <= total_degree, by increasing degree.
    for (int deg = 0; deg <= s.total_degree; ++deg) {
      std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == s.nvars - 1) {
          cur[i] = left;
          out.push_back(cur);
          return;
        }
        for (int v = left; v >= 0; --v) {
          cur[i] = v;
          rec(i + 1, left - v);
        }
      };
      rec(0, deg);
    }
    return out;
  }
  if (s.x_lo > s.x_hi) return out;
  std::fill(cur.begin(), cur.end(), s.x_lo);
  while (true) {
    out.push_back(cur);
    int i = s.nvars - 1;
    while (i >= 0 && cur[i] == s.x_hi) cur[i--] = s.x_lo;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

long word_count(const SpaceDesc& s) {
  long n = 1;
  for (int i = 0; i < s.word_len; ++i) n *= s.alphabet;
  return n;
}

IntSeq word_at(const SpaceDesc& s, long idx) {
  IntSeq w(s.word_len, 0);
  for (int i = s.word_len - 1; i >= 0; --i) {
    w[i] = static_cast<int>(idx % s.alphabet);
    idx /= s.alphabet;
  }
  return w;
}

}  // namespace

long basis_size(const SpaceDesc& space) {
  const long nx = static_cast<long>(x_parts(space).size());
  const long nm = space.module_keys.empty() ? 1 : static_cast<long>(space.module_keys.size());
  return nx * word_count(space) * nm;
}

std::vector<BasisKey> sample_basis(const SpaceDesc& space, long count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample_basis: count must be >= 1");
  const auto xs = x_parts(space);
  const long nw = word_count(space);
  const long nm = space.module_keys.empty() ? 1 : static_cast<long>(space.module_keys.size());
  const long total = static_cast<long>(xs.size()) * nw * nm;
  if (total == 0) throw std::invalid_argument("sample_basis: empty bounded basis");

  auto key_at = [&](long idx) {
    BasisKey k;
    const long im = idx % nm;
    idx /= nm;
    const long iw = idx % nw;
    idx /= nw;
    k.x = xs[idx];
    k.word = word_at(space, iw);
    if (!space.module_keys.empty()) {
      k.mono = space.module_keys[im].first;
      k.base = space.module_keys[im].second;
    }
    return k;
  };

  std::vector<BasisKey> out;
  if (total <= kExhaustiveLimit || count >= total) {
    out.reserve(total);
    for (long i = 0; i < total; ++i) out.push_back(key_at(i));
    return out;
  }
  // Draw distinct indices; sorted so the key order does not depend on draw order.
  std::mt19937_64 rng(seed);
  std::set<long> picked;
  while (static_cast<long>(picked.size()) < count)
    picked.insert(static_cast<long>(rng() % static_cast<std::uint64_t>(total)));
  out.reserve(count);
  for (long i : picked) out.push_back(key_at(i));
  return out;
}

std::vector<BasisKey> subsample(const std::vector<BasisKey>& keys, long count, std::uint64_t seed) {
  const long n = static_cast<long>(keys.size());
  if (count >= n) return keys;
  std::mt19937_64 rng(seed);
  std::set<long> picked;
  while (static_cast<long>(picked.size()) < count)
    picked.insert(static_cast<long>(rng() % static_cast<std::uint64_t>(n)));
  std::vector<BasisKey> out;
  out.reserve(count);
  for (long i : picked) out.push_back(keys[i]);
  return out;
}

}  // namespace cherednik
