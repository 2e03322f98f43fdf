#include "cherednik/gl_module.hpp"

#include <array>
#include <map>
#include <sstream>

#include "cherednik/diff_frac.hpp"

namespace cherednik {

Matrix Matrix::identity(int n) {
  Matrix r(n, n);
  for (int i = 0; i < n; ++i) r(i, i) = 1;
  return r;
}

Matrix Matrix::unit(int n, int a, int b) {
  Matrix r(n, n);
  r(a, b) = 1;
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
    }
  return r;
}

Matrix operator*(const Rational& c, const Matrix& a) {
  Matrix r = a;
  for (auto& v : r.data_) v *= c;
  return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows_; ++k)
        for (int l = 0; l < b.cols_; ++l)
          r(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
    }
  return r;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "," : "") << '[';
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

GlModule GlModule::unchecked(int m, int dim, std::vector<Matrix> action) {
  if (m < 1 || dim < 1) throw ModuleError("GlModule: need m >= 1 and dim >= 1");
  if (static_cast<int>(action.size()) != m * m)
    throw ModuleError("GlModule: expected m^2 matrices");
  for (const auto& a : action)
    if (a.rows() != dim || a.cols() != dim) throw ModuleError("GlModule: matrix size != dim");
  GlModule u;
  u.m_ = m;
  u.dim_ = dim;
  u.action_ = std::move(action);
  return u;
}

GlModule::GlModule(int m, int dim, std::vector<Matrix> action) {
  *this = unchecked(m, dim, std::move(action));
  const auto rep = validate(*this);
  if (!rep.passed())
    throw ModuleError("GlModule: bracket relation violated at (a,b,c,d)=" +
                      rep.failures.front().input);
}

Matrix GlModule::trace_element() const {
  Matrix r(dim_, dim_);
  for (int a = 0; a < m_; ++a) r = r + E(a, a);
  return r;
}

GlModule make_natural(int m) {
  std::vector<Matrix> act;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) act.push_back(Matrix::unit(m, a, b));
  return GlModule(m, m, std::move(act));
}

GlModule make_onedim(int m, const std::vector<Rational>& weights) {
  if (static_cast<int>(weights.size()) != m)
    throw ModuleError("make_onedim: need exactly m weights");
  std::vector<Matrix> act;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Matrix e(1, 1);
      if (a == b) e(0, 0) = weights[a];
      act.push_back(std::move(e));
    }
  return GlModule(m, 1, std::move(act));
}

GlModule make_trivial(int m) { return make_onedim(m, std::vector<Rational>(m, Rational(0))); }

GlModule tensor(const GlModule& u1, const GlModule& u2) {
  if (u1.m() != u2.m()) throw ModuleError("tensor: modules over different gl_m");
  const int m = u1.m();
  const Matrix i1 = Matrix::identity(u1.dim());
  const Matrix i2 = Matrix::identity(u2.dim());
  std::vector<Matrix> act;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) act.push_back(kron(u1.E(a, b), i2) + kron(i1, u2.E(a, b)));
  return GlModule(m, u1.dim() * u2.dim(), std::move(act));
}

GlModule shift_trace(const GlModule& u, const Rational& shift) {
  std::vector<Matrix> act = u.action();
  const Matrix id = Matrix::identity(u.dim());
  for (int a = 0; a < u.m(); ++a) act[a * u.m() + a] = act[a * u.m() + a] + shift * id;
  return GlModule(u.m(), u.dim(), std::move(act));
}

namespace {

std::string quad(int a, int b, int c, int d) {
  std::ostringstream os;
  os << '(' << a + 1 << ',' << b + 1 << ',' << c + 1 << ',' << d + 1 << ')';
  return os.str();
}

}  // namespace

CheckReport validate(const GlModule& u) {
  CheckReport rep;
  rep.name = "validate";
  rep.params["m"] = std::to_string(u.m());
  rep.params["dim"] = std::to_string(u.dim());
  const int m = u.m();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          const Matrix lhs = u.E(a, b) * u.E(c, d) - u.E(c, d) * u.E(a, b);
          Matrix rhs(u.dim(), u.dim());
          if (b == c) rhs = rhs + u.E(a, d);
          if (d == a) rhs = rhs - u.E(c, b);
          rep.count("bracket");
          if (lhs != rhs) rep.fail({"bracket", quad(a, b, c, d), rhs.str(), lhs.str()});
        }
  return rep;
}

namespace {

// Basis labels of gl_m adapted to gl_m = sl_m + C I:
//   a*m+b for E_ab (a != b), m*m + c for H_c = E_cc - E_{c+1,c+1}, m*m + m for I.
using Coords = std::map<int, Rational>;

Coords decompose_unit(int m, int a, int b) {
  Coords out;
  if (a != b) {
    out[a * m + b] = 1;
    return out;
  }
  const Rational inv_m(1, m);
  out[m * m + m] = inv_m;
  // E_aa - I/m = sum_c h_c H_c with h_c the partial sums of (e_a - 1/m).
  Rational partial_sum = 0;
  for (int c = 0; c + 1 < m; ++c) {
    partial_sum += (c == a ? Rational(1) : Rational(0)) - inv_m;
    if (!partial_sum.is_zero()) out[m * m + c] = partial_sum;
  }
  return out;
}

std::string label_str(int m, int label) {
  std::ostringstream os;
  if (label < m * m) os << "E" << label / m + 1 << label % m + 1;
  else if (label < m * m + m) os << "H" << label - m * m + 1;
  else os << "I";
  return os.str();
}

}  // namespace

CheckReport casimir_split_check(int m) {
  CheckReport rep;
  rep.name = "casimir_split";
  rep.params["m"] = std::to_string(m);
  const int trace_label = m * m + m;
  std::map<std::pair<int, int>, Rational> tensor;
  auto add = [&](const Coords& x, const Coords& y, const Rational& c) {
    for (const auto& [lx, cx] : x)
      for (const auto& [ly, cy] : y) tensor[{lx, ly}] += c * cx * cy;
  };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) add(decompose_unit(m, a, b), decompose_unit(m, b, a), 1);
  Coords trace;
  trace[trace_label] = 1;
  add(trace, trace, -Rational(1, m));
  for (const auto& [labels, c] : tensor) {
    if (labels.first != trace_label && labels.second != trace_label) continue;
    rep.count("trace_component");
    if (!c.is_zero())
      rep.fail({"trace_component", label_str(m, labels.first) + "(x)" + label_str(m, labels.second),
                "0", c.str()});
  }
  // The decomposition must reconstruct every E_ab exactly.
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Matrix back(m, m);
      for (const auto& [l, c] : decompose_unit(m, a, b)) {
        if (l < m * m) back = back + c * Matrix::unit(m, l / m, l % m);
        else if (l < trace_label)
          back = back + c * (Matrix::unit(m, l - m * m, l - m * m) -
                             Matrix::unit(m, l - m * m + 1, l - m * m + 1));
        else back = back + c * Matrix::identity(m);
      }
      rep.count("reconstruct");
      if (back != Matrix::unit(m, a, b))
        rep.fail({"reconstruct", label_str(m, a * m + b), Matrix::unit(m, a, b).str(), back.str()});
    }
  return rep;
}

CheckReport check_cybe(int m) {
  CheckReport rep;
  rep.name = "cybe";
  rep.params["m"] = std::to_string(m);
  constexpr int n = 3;
  using Key = std::array<int, 6>;
  std::map<Key, DiffFrac> total;
  auto add = [&](const Key& k, const DiffFrac& c) {
    auto it = total.find(k);
    if (it == total.end()) total.emplace(k, c);
    else it->second = it->second + c;
  };
  // Bracket [E_ab, E_cd] = d_bc E_ad - d_da E_cb as (row, col, sign) terms.
  auto bracket = [](int a, int b, int c, int d) {
    std::vector<std::array<int, 3>> out;
    if (b == c) out.push_back({a, d, 1});
    if (d == a) out.push_back({c, b, -1});
    return out;
  };
  auto pair_denominator = [&](int i, int j, int k, int l) {
    DiffFrac f = DiffFrac::inverse_difference(n, i, j);
    return f.mul_by_inverse_difference(k, l);
  };
  const DiffFrac c12_13 = pair_denominator(0, 1, 0, 2);
  const DiffFrac c12_23 = pair_denominator(0, 1, 1, 2);
  const DiffFrac c13_23 = pair_denominator(0, 2, 1, 2);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          // [r12, r13]: [E_ab, E_cd] (x) E_ba (x) E_dc
          for (auto [i, j, s] : bracket(a, b, c, d)) add({i, j, b, a, d, c}, c12_13 * Rational(s));
          // [r12, r23]: E_ab (x) [E_ba, E_cd] (x) E_dc
          for (auto [i, j, s] : bracket(b, a, c, d)) add({a, b, i, j, d, c}, c12_23 * Rational(s));
          // [r13, r23]: E_ab (x) E_cd (x) [E_ba, E_dc]
          for (auto [i, j, s] : bracket(b, a, d, c)) add({a, b, c, d, i, j}, c13_23 * Rational(s));
        }
  for (const auto& [k, v] : total) {
    rep.count("cybe_component");
    if (!v.is_zero()) {
      std::ostringstream key;
      key << "E" << k[0] + 1 << k[1] + 1 << "(x)E" << k[2] + 1 << k[3] + 1 << "(x)E" << k[4] + 1
          << k[5] + 1;
      rep.fail({"cybe_component", key.str(), "0", v.str()});
    }
  }
  // Every component of the m^6-dimensional tensor counts, including absent ones.
  rep.instances["tensor_entries"] = static_cast<long>(m) * m * m * m * m * m;
  return rep;
}

}  // namespace cherednik
