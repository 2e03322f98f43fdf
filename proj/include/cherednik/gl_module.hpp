#ifndef CHEREDNIK_GL_MODULE_HPP
#define CHEREDNIK_GL_MODULE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "cherednik/rational.hpp"
#include "cherednik/report.hpp"

namespace cherednik {

/// Small dense matrix over Q.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(int n);
  /// Elementary matrix e_{ab} of size n.
  static Matrix unit(int n, int a, int b);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& operator()(int i, int j) const { return data_[i * cols_ + j]; }
  Rational& operator()(int i, int j) { return data_[i * cols_ + j]; }
  bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, const Matrix& a);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// Kronecker product a (x) b.
  friend Matrix kron(const Matrix& a, const Matrix& b);

  std::string str() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

class ModuleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Finite-dimensional gl_m-module: an explicit matrix for every E_ab.
///
/// Constructing through the public constructor validates all m^4 bracket
/// relations and throws ModuleError naming the first violated (a,b,c,d).
class GlModule {
public:
  GlModule() = default;
  /// action[a * m + b] is the matrix of E_ab (0-based a, b).
  GlModule(int m, int dim, std::vector<Matrix> action);
  /// Skips validation; used for negative controls.
  static GlModule unchecked(int m, int dim, std::vector<Matrix> action);

  int m() const { return m_; }
  int dim() const { return dim_; }
  const Matrix& E(int a, int b) const { return action_[a * m_ + b]; }
  const std::vector<Matrix>& action() const { return action_; }
  /// Matrix of I = E_11 + ... + E_mm.
  Matrix trace_element() const;

  friend bool operator==(const GlModule&, const GlModule&) = default;

private:
  int m_ = 0, dim_ = 0;
  std::vector<Matrix> action_;
};

/// A gl_m-module used through its sl_m-structure only: operators built from it
/// subtract the (1/m) I correction.
struct SlRestriction {
  GlModule base;
  bool use_sl_correction = true;
};

GlModule make_natural(int m);
GlModule make_onedim(int m, const std::vector<Rational>& weights);
GlModule make_trivial(int m);
GlModule tensor(const GlModule& u1, const GlModule& u2);
/// Same sl_m-module with I shifted by m*shift (E_aa -> E_aa + shift).
GlModule shift_trace(const GlModule& u, const Rational& shift);

/// Checks [E_ab, E_cd] = d_bc E_ad - d_da E_cb for all a, b, c, d.
CheckReport validate(const GlModule& u);

/// Decomposes sum_ab E_ab (x) E_ba - (1/m) I (x) I in the basis
/// {E_ab (a != b), E_aa - E_{a+1,a+1}, I} (x) (same) and checks that no
/// component involves I.
CheckReport casimir_split_check(int m);

/// Classical Yang-Baxter equation for r(u,v) = (u - v)^{-1} sum E_ab (x) E_ba,
/// computed in gl_m^{(x)3} with rational-function coefficients.
CheckReport check_cybe(int m);

}  // namespace cherednik

#endif  // CHEREDNIK_GL_MODULE_HPP
