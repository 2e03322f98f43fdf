#ifndef CHEREDNIK_LAURENT_HPP
#define CHEREDNIK_LAURENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/perm.hpp"
#include "cherednik/rational.hpp"

namespace cherednik {

using Exponent = std::vector<int>;

/// Sparse Laurent polynomial in x_0, ..., x_{N-1} over Q.
class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}

  static LaurentPoly constant(int nvars, const Rational& c);
  static LaurentPoly monomial(Exponent e, const Rational& c = 1);
  static LaurentPoly variable(int nvars, int p, int power = 1);
  /// x_p - x_r
  static LaurentPoly difference(int nvars, int p, int r);

  int nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const& { return terms_; }
  std::map<Exponent, Rational> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Human-readable form with 1-based variable names, e.g. "x1^2*x2 - 1/2*x3^-1".
  std::string str() const;

private:
  void check_nvars(const LaurentPoly& o) const;

  int nvars_ = 0;
  std::map<Exponent, Rational> terms_;
};

/// Exponent vector of s(x^e): the exponent of x_i moves to x_{s(i)}.
Exponent permute_exponent(const Exponent& e, const Perm& s);
/// Exponent vector with positions p and r exchanged.
Exponent swap_exponent(Exponent e, int p, int r);

LaurentPoly permute(const LaurentPoly& a, const Perm& s);
LaurentPoly partial(const LaurentPoly& a, int p);

/// Exact division by (x_p - x_r); nullopt when the remainder is nonzero.
std::optional<LaurentPoly> divide_by_difference(const LaurentPoly& a, int p, int r);

/// (1 - s_{pr}) a / (x_p - x_r), computed by exact division.
LaurentPoly divided_difference(int p, int r, const LaurentPoly& a);

/// Closed form of the divided difference of a single monomial x^e (a finite
/// geometric sum). Agrees with divided_difference on monomials.
LaurentPoly monomial_divided_difference(int p, int r, const Exponent& e,
                                        const Rational& c = 1);

/// Renders an exponent vector as "[e0,e1,...]".
std::string exponent_str(const Exponent& e);

}  // namespace cherednik

#endif  // CHEREDNIK_LAURENT_HPP
