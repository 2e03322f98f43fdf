#ifndef CHEREDNIK_DIFF_FRAC_HPP
#define CHEREDNIK_DIFF_FRAC_HPP

#include <map>
#include <string>
#include <utility>

#include "cherednik/laurent.hpp"

namespace cherednik {

/// Rational function num / prod (x_p - x_r)^k with p < r.
///
/// The denominator is a multiset of difference factors, which is all the
/// extended-space operators ever produce. There is no canonical form; equality
/// is decided by cross-multiplication. reduce() cancels factors that divide the
/// numerator, which is enough to decide membership in the Laurent ring.
class DiffFrac {
public:
  using Factor = std::pair<int, int>;  // (p, r), p < r

  DiffFrac() = default;
  explicit DiffFrac(int nvars) : num_(nvars) {}
  explicit DiffFrac(LaurentPoly num) : num_(std::move(num)) {}

  static DiffFrac constant(int nvars, const Rational& c) {
    return DiffFrac(LaurentPoly::constant(nvars, c));
  }
  /// 1 / (x_p - x_r) for any p != r (sign normalized into the numerator).
  static DiffFrac inverse_difference(int nvars, int p, int r);

  int nvars() const { return num_.nvars(); }
  const LaurentPoly& num() const { return num_; }
  const std::map<Factor, int>& denom() const { return denom_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when no denominator factor is left (call reduce() first to decide
  /// membership in the Laurent ring).
  bool is_laurent() const { return denom_.empty(); }

  /// Cancels every denominator factor that divides the numerator.
  DiffFrac& reduce();
  DiffFrac reduced() const { DiffFrac r = *this; return r.reduce(); }

  DiffFrac& mul_by_inverse_difference(int p, int r);

  friend DiffFrac operator+(const DiffFrac& a, const DiffFrac& b);
  friend DiffFrac operator-(const DiffFrac& a, const DiffFrac& b);
  friend DiffFrac operator-(const DiffFrac& a);
  friend DiffFrac operator*(const DiffFrac& a, const DiffFrac& b);
  friend DiffFrac operator*(const DiffFrac& a, const Rational& c);
  friend DiffFrac operator*(const Rational& c, const DiffFrac& a) { return a * c; }
  DiffFrac& operator+=(const DiffFrac& o) { return *this = *this + o; }

  /// a == b iff a - b is zero after bringing both to the common denominator.
  friend bool frac_eq(const DiffFrac& a, const DiffFrac& b);

  std::string str() const;

private:
  LaurentPoly num_;
  std::map<Factor, int> denom_;
};

DiffFrac permute(const DiffFrac& a, const Perm& s);
DiffFrac partial(const DiffFrac& a, int p);

}  // namespace cherednik

#endif  // CHEREDNIK_DIFF_FRAC_HPP
