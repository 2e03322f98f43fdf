#ifndef CHEREDNIK_WSPACE_HPP
#define CHEREDNIK_WSPACE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/affine.hpp"
#include "cherednik/diff_frac.hpp"
#include "cherednik/linops.hpp"

namespace cherednik {

/// W = C[x^{+-1}] (x) (C^m)^{(x)N} (x) M. With `sl_correction` the operators use
/// E_ba t^i - d_ab (1/m) I t^i in place of E_ba t^i.
struct WSpace {
  int N = 0;
  InducedModule M;
  bool sl_correction = false;
  Rational kappa = 1;

  int m() const { return M.m(); }
};

/// sl flavor needs the correction; a gl-flavored module may be used either way.
WSpace make_wspace(int N, InducedModule M, bool sl_correction, Rational kappa);

/// Keys with x-exponents in [lo, hi] and module depth <= depth; exhaustive up
/// to the 10^4 threshold, otherwise `samples` seeded keys.
SpaceDesc w_space_desc(const WSpace& W, int lo, int hi, int depth);
std::vector<BasisKey> w_keys(const WSpace& W, int lo, int hi, int depth, long samples, std::uint64_t seed);

LinOp<Rational> op_X(const WSpace& W, int p, int power = 1);
/// kappa d_p + sum_{r != p} divided differences (x) s_pr + sum_i sum_ab x_p^{-i-1} E_ab^{(p)} (x) E_ba t^i
LinOp<Rational> op_Y(const WSpace& W, int p);
/// Cherednik operator X_p Y_p realizing z_p.
LinOp<Rational> cherednik_z(const WSpace& W, int p);
/// The loop-algebra element E_ba t^i, corrected when W.sl_correction.
LieElem y_loop_element(const WSpace& W, int b, int a, int i);

/// Operators on the extended space: keys without x-part, coefficients in
/// rational functions of x_1..x_N. Not linear over the coefficients, so they
/// act term by term on (key, coefficient).
class ExtOp {
public:
  using Fn = std::function<ExtVec(const BasisKey&, const DiffFrac&)>;
  ExtOp() = default;
  ExtOp(std::string name, Fn fn);
  const std::string& name() const { return name_; }
  ExtVec apply(const ExtVec& v) const;

  friend ExtOp operator+(const ExtOp& a, const ExtOp& b);
  friend ExtOp operator*(const Rational& c, const ExtOp& a);
  friend ExtOp compose(const ExtOp& a, const ExtOp& b);
  friend ExtOp commutator(const ExtOp& a, const ExtOp& b);

private:
  std::string name_;
  std::shared_ptr<const Fn> fn_;
};

/// A W-vector with the x-part folded into the coefficients.
ExtVec embed(const Vec& v, int N);
/// Back to W when every coefficient reduces to a Laurent polynomial.
std::optional<Vec> restrict_to_w(const ExtVec& v);

struct DRT {
  ExtOp D, R, T;
};
DRT ext_DRT(const WSpace& W, int p);
/// kappa D_p + eps R_p + T_p
ExtOp ext_family(const WSpace& W, int p, const Rational& eps);

CheckReport extended_lemma_suite(const WSpace& W, std::span<const BasisKey> keys);
/// Witness key x_1 (x) e_1 (x) e_2 (x) (1 (x) u): eps = 0 leaves W, eps = -1 stays in W.
CheckReport epsilon_witness(const WSpace& W);

CheckReport cherednik_relation_suite(const WSpace& W, std::span<const BasisKey> keys);
/// Finds a key where [Y_1, theta(E_12 t)] is nonzero.
CheckReport nonzero_mode_witness(const WSpace& W, std::span<const BasisKey> keys);

/// [Y_1, theta(E_cd t^j)] against the closed-form right-hand side, j < 0.
/// Throws std::invalid_argument unless the level is kappa - m (when require_level).
CheckReport commutator_formula_check(const WSpace& W, int j, int c, int d, std::span<const BasisKey> keys,
                                     bool require_level = true);
/// Same commutator against delta_cd j x_1^{j-1} + omega(J), and the three
/// pieces omega_1(J), omega_r(J), omega_{N+1}(J) separately.
CheckReport j_element_check(const WSpace& W, int j, int c, int d, std::span<const BasisKey> keys,
                            bool require_level = true);
/// Decomposes J in the basis {E_ab (a != b), H_a, I} (x) (same) at each mode and
/// checks that no trace component occurs.
CheckReport j_membership_check(int m, int j, int c, int d);

}  // namespace cherednik

#endif  // CHEREDNIK_WSPACE_HPP
