#include "cherednik/diff_frac.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cherednik {

namespace {

LaurentPoly factor_poly(int n, const DiffFrac::Factor& f) {
  return LaurentPoly::difference(n, f.first, f.second);
}

LaurentPoly multiply_factors(LaurentPoly num, const std::map<DiffFrac::Factor, int>& extra) {
  const int n = num.nvars();
  for (const auto& [f, k] : extra)
    for (int i = 0; i < k; ++i) num = num * factor_poly(n, f);
  return num;
}

}  // namespace

DiffFrac DiffFrac::inverse_difference(int nvars, int p, int r) {
  DiffFrac d = constant(nvars, 1);
  return d.mul_by_inverse_difference(p, r);
}

DiffFrac& DiffFrac::mul_by_inverse_difference(int p, int r) {
  if (p == r) throw std::invalid_argument("DiffFrac: factor (p, p)");
  if (p > r) {
    std::swap(p, r);
    num_ *= Rational(-1);
  }
  if (!num_.is_zero()) ++denom_[{p, r}];
  return *this;
}

DiffFrac& DiffFrac::reduce() {
  if (num_.is_zero()) {
    denom_.clear();
    return *this;
  }
  for (auto it = denom_.begin(); it != denom_.end();) {
    while (it->second > 0) {
      auto q = divide_by_difference(num_, it->first.first, it->first.second);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? denom_.erase(it) : std::next(it);
  }
  return *this;
}

DiffFrac operator+(const DiffFrac& a, const DiffFrac& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("DiffFrac: nvars mismatch");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::map<DiffFrac::Factor, int> lcm = a.denom_;
  for (const auto& [f, k] : b.denom_) lcm[f] = std::max(lcm[f], k);
  std::map<DiffFrac::Factor, int> extra_a, extra_b;
  for (const auto& [f, k] : lcm) {
    auto ia = a.denom_.find(f);
    auto ib = b.denom_.find(f);
    const int ka = ia == a.denom_.end() ? 0 : ia->second;
    const int kb = ib == b.denom_.end() ? 0 : ib->second;
    if (k > ka) extra_a[f] = k - ka;
    if (k > kb) extra_b[f] = k - kb;
  }
  DiffFrac r(multiply_factors(a.num_, extra_a) + multiply_factors(b.num_, extra_b));
  r.denom_ = std::move(lcm);
  return r.reduce();
}

DiffFrac operator-(const DiffFrac& a) {
  DiffFrac r = a;
  r.num_ *= Rational(-1);
  return r;
}

DiffFrac operator-(const DiffFrac& a, const DiffFrac& b) { return a + (-b); }

DiffFrac operator*(const DiffFrac& a, const DiffFrac& b) {
  DiffFrac r(a.num_ * b.num_);
  if (r.is_zero()) return r;
  r.denom_ = a.denom_;
  for (const auto& [f, k] : b.denom_) r.denom_[f] += k;
  return r.reduce();
}

DiffFrac operator*(const DiffFrac& a, const Rational& c) {
  if (c.is_zero()) return DiffFrac(a.nvars());
  DiffFrac r = a;
  r.num_ *= c;
  return r;
}

bool frac_eq(const DiffFrac& a, const DiffFrac& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("DiffFrac: nvars mismatch");
  // Cross-multiply: a.num * (lcm / a.den) == b.num * (lcm / b.den).
  std::map<DiffFrac::Factor, int> extra_a, extra_b;
  std::map<DiffFrac::Factor, int> lcm = a.denom_;
  for (const auto& [f, k] : b.denom_) lcm[f] = std::max(lcm[f], k);
  for (const auto& [f, k] : lcm) {
    auto ia = a.denom_.find(f);
    auto ib = b.denom_.find(f);
    const int ka = ia == a.denom_.end() ? 0 : ia->second;
    const int kb = ib == b.denom_.end() ? 0 : ib->second;
    if (k > ka) extra_a[f] = k - ka;
    if (k > kb) extra_b[f] = k - kb;
  }
  return multiply_factors(a.num_, extra_a) == multiply_factors(b.num_, extra_b);
}

DiffFrac permute(const DiffFrac& a, const Perm& s) {
  DiffFrac r(permute(a.num(), s));
  for (const auto& [f, k] : a.denom())
    for (int i = 0; i < k; ++i) r.mul_by_inverse_difference(s(f.first), s(f.second));
  return r;
}

DiffFrac partial(const DiffFrac& a, int p) {
  // d(N / prod f^k) = dN / D - N * sum_f k (df/dx_p) / (f D),  df/dx_p = +-1.
  DiffFrac base(partial(a.num(), p));
  for (const auto& [f, k] : a.denom())
    for (int i = 0; i < k; ++i) base.mul_by_inverse_difference(f.first, f.second);
  DiffFrac result = base;
  for (const auto& [f, k] : a.denom()) {
    int df = (f.first == p) ? 1 : (f.second == p ? -1 : 0);
    if (df == 0) continue;
    DiffFrac term = a * Rational(-k * df);
    term.mul_by_inverse_difference(f.first, f.second);
    result = result + term;
  }
  return result;
}

std::string DiffFrac::str() const {
  if (denom_.empty()) return num_.str();
  std::ostringstream os;
  os << '(' << num_.str() << ")/(";
  bool first = true;
  for (const auto& [f, k] : denom_) {
    if (!first) os << '*';
    first = false;
    os << "(x" << f.first + 1 << "-x" << f.second + 1 << ')';
    if (k != 1) os << '^' << k;
  }
  os << ')';
  return os.str();
}

}  // namespace cherednik
