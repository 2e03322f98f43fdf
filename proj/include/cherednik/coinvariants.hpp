#ifndef CHEREDNIK_COINVARIANTS_HPP
#define CHEREDNIK_COINVARIANTS_HPP

#include <vector>

#include "cherednik/affine.hpp"
#include "cherednik/gl_module.hpp"
#include "cherednik/linops.hpp"
#include "cherednik/wspace.hpp"

namespace cherednik {

/// Which PBW factor a reducer peels off first.
enum class NfStrategy { leftmost, rightmost };

// ---------------------------------------------------------------- affine setting

/// Normal form of a W-vector modulo qW, q = t^{-1} sl_m[t^{-1}]: the unique
/// representative supported on depth-0 keys. Uses P (x) rest == -sum_q x_q^{-k} F^{(q)} (x) rest
/// for P = F t^{-k}. For gl-induced modules the factors I t^{-k} are central in
/// U(t^{-1} gl_m[t^{-1}]) and survive as trace ids in the output monomials.
Vec nf_affine(int N, const InducedModule& M, const Vec& w, NfStrategy s = NfStrategy::leftmost);
Vec nf_affine(int N, const InducedModule& M, const BasisKey& k, NfStrategy s = NfStrategy::leftmost);

/// Induced T_N-module on Laurent (x) (C^m)^{(x)N} (x) U, built from the F_N action
/// on constants through the T_N cross relations.
struct TnModel {
  int N = 0;
  GlModule U;
  Rational kappa = 1;

  int m() const { return U.m(); }
};

LinOp<Rational> tn_x(const TnModel& T, int p, int power = 1);
LinOp<Rational> tn_sigma(const TnModel& T, const Perm& s);
/// z_p by peeling x-factors: z_p x_q = x_q z_p + [z_p, x_q].
LinOp<Rational> tn_z(const TnModel& T, int p);
/// Closed form f (x) z^F v + kappa x_p d_p f (x) v + sum_r x_p dd_pr(f) (x) s_pr v.
LinOp<Rational> tn_z_closed(const TnModel& T, int p);

/// nf_affine(g . v) = g . v for model keys v (depth 0), and
/// nf_affine(g . w) = g . nf_affine(w) on the given W-keys, for g in
/// {x_p^{+-1}, simple reflections, z_p}. Throws std::invalid_argument unless the
/// level is kappa - m (when require_level).
CheckReport check_trig_equivalence(const GlModule& U, int N, const Rational& kappa, std::span<const BasisKey> model_keys,
                         std::span<const BasisKey> w_keys, const Rational& level_offset = 0);

/// nf_affine(Y_p theta(P) w) = 0 for every generator P of t^{-1} sl_m[t^{-1}] of depth <= q_depth.
CheckReport check_qw_preservation(const WSpace& W, std::span<const BasisKey> keys, int q_depth);

/// Two strategies agree on every key, nf is idempotent and the identity on depth-0 keys.
CheckReport nf_affine_soundness(int N, const InducedModule& M, std::span<const BasisKey> keys);

// ---------------------------------------------------------------- finite setting

/// gl_{m+n} with A = {0..m-1}, B = {m..m+n-1}; q = span E_ab (a in B, b in A).
/// The induced module U(q) (x) U (x) V has keys (mono, base = u * dimV + v);
/// E_N of it has keys (word over m+n letters, mono, base).
class FiniteInduced {
public:
  FiniteInduced(GlModule U, GlModule V);

  int m() const { return U_.m(); }
  int n() const { return V_.m(); }
  int size() const { return m() + n(); }
  const GlModule& U() const { return U_; }
  const GlModule& V() const { return V_; }
  int base_dim() const { return U_.dim() * V_.dim(); }
  bool in_q(int a, int b) const { return a >= m() && b < m(); }

  /// E_ab acting on (mono, base), other key parts carried along.
  Vec act(int a, int b, const BasisKey& k) const;
  /// All (mono, base) of q-degree <= degree.
  std::vector<std::pair<IntSeq, int>> keys(int degree) const;

private:
  void act_rec(int a, int b, const IntSeq& mono, std::size_t from, int base, const Rational& c,
               const BasisKey& k, Vec& out) const;
  GlModule U_, V_;
};

/// u_p = z_p + sum_{q<p} s_qp on E_N(module) with z_p = sum_ab E_ab^{(p)} (x) E_ba.
LinOp<Rational> finite_u(const FiniteInduced& F, int N, int p);
/// Normal form modulo q (E_N(module)): depth-0 representative.
Vec nf_finite(const FiniteInduced& F, const Vec& v, NfStrategy s = NfStrategy::leftmost);
Vec nf_finite(const FiniteInduced& F, const BasisKey& k, NfStrategy s = NfStrategy::leftmost);

/// Induced H_N-module on words over m+n letters (x) U (x) V: on sorted words A^K B^{N-K}
/// u_p acts by the E_K(U) / shifted E_{N-K}(V) formulas, elsewhere by transport.
/// `bound_shift` adds bound_shift * id to each u_p (1 reads s_pp as the identity).
struct ParabolicBimodule {
  FiniteInduced F;
  int N;
  int bound_shift = 0;
};
ParabolicBimodule build_parabolic_bimodule(const GlModule& U, const GlModule& V, int N, int bound_shift = 0);
LinOp<Rational> bimodule_u(const ParabolicBimodule& B, int p);
std::vector<BasisKey> bimodule_basis(const ParabolicBimodule& B);

/// u-commutativity, cross1, cross2 for given u operators.
CheckReport hecke_presentation_check(int N, const std::vector<LinOp<Rational>>& u, std::span<const BasisKey> keys);

/// Dimension identity, nf_finite soundness, and equivariance of the identification
/// with the bimodule (on depth-0 keys and through nf on keys of q-degree <= degree).
CheckReport check_parabolic_equivalence(const GlModule& U, const GlModule& V, int N, int degree, int bound_shift = 0);

}  // namespace cherednik

#endif  // CHEREDNIK_COINVARIANTS_HPP
