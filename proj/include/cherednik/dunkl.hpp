#ifndef CHEREDNIK_DUNKL_HPP
#define CHEREDNIK_DUNKL_HPP

#include "cherednik/laurent.hpp"
#include "cherednik/linops.hpp"

namespace cherednik {

struct CherednikParams {
  int N = 0;
  Rational kappa = 1;
};

/// Keys carrying only an x-part; conversions to and from LaurentPoly.
BasisKey x_key(const Exponent& e);
Vec to_vec(const LaurentPoly& a);
LaurentPoly to_poly(const Vec& v, int nvars);

/// Multiplication by x_p^power (on any key with an x-part).
LinOp<Rational> x_op(int p, int power = 1);

/// y_p = kappa d_p + sum_{r != p} (x_p - x_r)^{-1} (1 - s_pr)
LinOp<Rational> dunkl_y(const CherednikParams& c, int p);
/// z_p = kappa x_p d_p + sum_{r != p} x_p (x_p - x_r)^{-1} (1 - s_pr)
LinOp<Rational> trig_z(const CherednikParams& c, int p);
/// u_p = z_p + sum_{r<p} s_pr
LinOp<Rational> trig_u(const CherednikParams& c, int p);

/// Monomials of total degree <= bound in N variables.
std::vector<BasisKey> polynomial_keys(int N, int degree_bound);
/// Laurent monomials with every exponent in [lo, hi].
std::vector<BasisKey> laurent_keys(int N, int lo, int hi);

CheckReport rational_relation_suite(const CherednikParams& c, int degree_bound);
CheckReport trig_relation_suite(const CherednikParams& c, int lo, int hi);
/// z_p -> x_p y_p satisfies the conjugation and [z_p, z_q] relations of H_N.
CheckReport embedding_check(const CherednikParams& c, int degree_bound);

}  // namespace cherednik

#endif  // CHEREDNIK_DUNKL_HPP
