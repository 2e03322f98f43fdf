#include "cherednik/laurent.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace cherednik {

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
  LaurentPoly r(nvars);
  r.add_term(Exponent(nvars, 0), c);
  return r;
}

LaurentPoly LaurentPoly::monomial(Exponent e, const Rational& c) {
  LaurentPoly r(static_cast<int>(e.size()));
  r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::variable(int nvars, int p, int power) {
  Exponent e(nvars, 0);
  e.at(p) = power;
  return monomial(std::move(e));
}

LaurentPoly LaurentPoly::difference(int nvars, int p, int r) {
  return variable(nvars, p) - variable(nvars, r);
}

Rational LaurentPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("LaurentPoly: exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LaurentPoly::check_nvars(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("LaurentPoly: nvars mismatch");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_nvars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_nvars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_nvars(b);
  LaurentPoly r(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponents first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) os << (c.sign() < 0 ? "-" : "");
    else os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    bool constant = true;
    for (int v : e) constant = constant && v == 0;
    bool need_star = false;
    if (constant || mag != Rational(1)) {
      os << mag;
      need_star = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << 'x' << i + 1;
      if (e[i] != 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

Exponent permute_exponent(const Exponent& e, const Perm& s) {
  Exponent r(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) r[s(static_cast<int>(i))] = e[i];
  return r;
}

Exponent swap_exponent(Exponent e, int p, int r) {
  std::swap(e[p], e[r]);
  return e;
}

LaurentPoly permute(const LaurentPoly& a, const Perm& s) {
  if (s.size() != a.nvars()) throw std::invalid_argument("permute: degree mismatch");
  LaurentPoly r(a.nvars());
  for (const auto& [e, c] : a.terms()) r.add_term(permute_exponent(e, s), c);
  return r;
}

LaurentPoly partial(const LaurentPoly& a, int p) {
  LaurentPoly r(a.nvars());
  for (const auto& [e, c] : a.terms()) {
    if (e[p] == 0) continue;
    Exponent f = e;
    f[p] -= 1;
    r.add_term(f, c * Rational(e[p]));
  }
  return r;
}

std::optional<LaurentPoly> divide_by_difference(const LaurentPoly& a, int p, int r) {
  const int n = a.nvars();
  if (p == r) throw std::invalid_argument("divide_by_difference: p == r");
  if (a.is_zero()) return LaurentPoly(n);
  // Coefficients of a as a polynomial in x_p (after shifting to nonnegative powers).
  std::map<int, LaurentPoly> by_power;
  for (const auto& [e, c] : a.terms()) {
    Exponent rest = e;
    rest[p] = 0;
    auto [it, _] = by_power.try_emplace(e[p], LaurentPoly(n));
    it->second.add_term(rest, c);
  }
  const int lo = by_power.begin()->first;
  const int hi = by_power.rbegin()->first;
  if (hi == lo) return std::nullopt;  // nonzero and constant in x_p
  const LaurentPoly xr = LaurentPoly::variable(n, r);
  // Synthetic division by the root x_p = x_r, highest power first.
  std::vector<LaurentPoly> quot(hi - lo, LaurentPoly(n));
  LaurentPoly carry(n);
  for (int k = hi; k > lo; --k) {
    auto it = by_power.find(k);
    LaurentPoly ck = it == by_power.end() ? LaurentPoly(n) : it->second;
    carry = ck + xr * carry;
    quot[k - 1 - lo] = carry;
  }
  auto it0 = by_power.find(lo);
  const LaurentPoly remainder = it0->second + xr * carry;
  if (!remainder.is_zero()) return std::nullopt;
  LaurentPoly result(n);
  for (int k = 0; k < hi - lo; ++k) {
    for (const auto& [e, c] : quot[k].terms()) {
      Exponent f = e;
      f[p] = k + lo;
      result.add_term(f, c);
    }
  }
  return result;
}

LaurentPoly divided_difference(int p, int r, const LaurentPoly& a) {
  const LaurentPoly numer = a - permute(a, Perm::transposition(p, r, a.nvars()));
  auto q = divide_by_difference(numer, p, r);
  if (!q) {
    std::cerr << "divided_difference: inexact division of " << numer.str() << '\n';
    std::abort();
  }
  return *q;
}

LaurentPoly monomial_divided_difference(int p, int r, const Exponent& e, const Rational& c) {
  LaurentPoly out(static_cast<int>(e.size()));
  const int alpha = e[p];
  const int beta = e[r];
  if (alpha == beta || c.is_zero()) return out;
  int hi_idx = p, lo_idx = r;
  Rational sign = c;
  int a = alpha, b = beta;
  if (alpha < beta) {
    std::swap(hi_idx, lo_idx);
    std::swap(a, b);
    sign = -c;
  }
  Exponent f = e;
  for (int i = 0; i < a - b; ++i) {
    f[hi_idx] = a - 1 - i;
    f[lo_idx] = b + i;
    out.add_term(f, sign);
  }
  return out;
}

std::string exponent_str(const Exponent& e) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ']';
  return os.str();
}

}  // namespace cherednik
