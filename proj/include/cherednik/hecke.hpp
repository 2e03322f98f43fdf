#ifndef CHEREDNIK_HECKE_HPP
#define CHEREDNIK_HECKE_HPP

#include <vector>

#include "cherednik/gl_module.hpp"
#include "cherednik/linops.hpp"
#include "cherednik/perm.hpp"

namespace cherednik {

/// Action of H_N on (C^m)^{(x)N} (x) U. Keys use `word` and `base`.
struct HeckeFamily {
  int N = 0;
  GlModule U;
  bool sl = false;     // F_N instead of E_N
  Rational shift = 0;  // u_p -> u_p + shift

  int m() const { return U.m(); }
};

/// Permutes the word and the x-exponents of a key: entry i moves to position s(i).
BasisKey permute_word(const BasisKey& k, const Perm& s);
LinOp<Rational> sigma_op(const Perm& s);

/// z_p = sum_ab E_ab^{(p)} (x) E_ba on (C^m)^{(x)N} (x) U.
LinOp<Rational> en_z(const GlModule& U, int N, int p);
/// en_z minus (1/m) id (x) I.
LinOp<Rational> fn_z(const GlModule& U, int N, int p);
LinOp<Rational> hecke_z(const HeckeFamily& f, int p);
/// u_p = z_p + sum_{q<p} s_qp + shift.
LinOp<Rational> hecke_u(const HeckeFamily& f, int p);

/// Diagonal action of X = sum_cd c_cd E_cd on every tensor factor and on U.
LinOp<Rational> diag_action(const GlModule& U, int N, const Matrix& x);

/// Image of u_p under the evaluation homomorphism H_N -> C Sym_N.
GroupAlgElem eval_hom(int N, int p);

/// Full basis words x base of the family's space.
std::vector<BasisKey> hecke_basis(const HeckeFamily& f);

/// Cross relations, conjugation by simple reflections, [z_p, z_q] relation,
/// commutation with the diagonal gl_m (sl_m when f.sl) action.
CheckReport hecke_relation_suite(const HeckeFamily& f, std::span<const BasisKey> keys);

/// Generators of gl_m (all E_cd) or of sl_m (E_cd, c != d, and E_cc - E_{c+1,c+1}).
std::vector<std::pair<std::string, Matrix>> lie_generators(int m, bool sl);

}  // namespace cherednik

#endif  // CHEREDNIK_HECKE_HPP
