#ifndef CHEREDNIK_AFFINE_HPP
#define CHEREDNIK_AFFINE_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "cherednik/gl_module.hpp"
#include "cherednik/linops.hpp"

namespace cherednik {

enum class Flavor { gl, sl };
std::string flavor_str(Flavor f);

/// E_ab t^j, H_a t^j = (E_aa - E_{a+1,a+1}) t^j (b == kCartan), or the central C.
struct LoopGen {
  int a = 0, b = 0, j = 0;
  bool central = false;

  static LoopGen E(int a, int b, int j) { return {a, b, j, false}; }
  static LoopGen H(int a, int j) { return {a, kCartan, j, false}; }
  static LoopGen C() { return {0, 0, 0, true}; }
  bool is_cartan() const { return !central && b == kCartan; }

  std::string str() const;
  friend auto operator<=>(const LoopGen&, const LoopGen&) = default;
};

/// Finite linear combination of loop generators.
using LieElem = std::map<LoopGen, Rational>;

LieElem lie(const LoopGen& g, const Rational& c = 1);
void lie_add(LieElem& x, const LoopGen& g, const Rational& c);
LieElem operator+(LieElem x, const LieElem& y);
LieElem operator*(const Rational& c, const LieElem& x);
std::string lie_str(const LieElem& x);

/// Rewrites H_a t^j as E_aa t^j - E_{a+1,a+1} t^j.
LieElem expand_cartan(const LieElem& x);

/// [E_ab t^i, E_cd t^j] = d_bc E_ad t^{i+j} - d_da E_cb t^{i+j} + i d_{i,-j} d_ad d_bc C,
/// returned in the E/C basis.
LieElem affine_bracket(const LoopGen& x, const LoopGen& y);
LieElem affine_bracket(const LieElem& x, const LieElem& y);

/// Generators E_ab t^{-k} (gl), or E_ab t^{-k} (a != b) and H_a t^{-k} (sl), 1 <= k <= depth_bound.
std::vector<LoopGen> q_basis(Flavor flavor, int m, int depth_bound);

/// Jacobi identity and antisymmetry on all triples of generators with modes in [lo, hi].
CheckReport affine_jacobi_check(int m, int lo, int hi);

/// Module induced from U (sl_m[t] + C C, or gl_m[t] + C C) at a given level:
/// basis keys (mono, base) with `mono` a sorted PBW monomial in q. Other parts
/// of a key (x, word) are carried through unchanged.
class InducedModule {
public:
  InducedModule(GlModule U, Rational level, Flavor flavor);

  const GlModule& base() const { return U_; }
  const Rational& level() const { return level_; }
  Flavor flavor() const { return flavor_; }
  int m() const { return U_.m(); }

  /// Generators whose PBW id is allowed in a monomial.
  bool is_q_id(int id) const;

  Vec act(const LoopGen& g, const BasisKey& k) const;
  Vec act(const LieElem& x, const BasisKey& k) const;
  Vec act(const LieElem& x, const Vec& v) const;
  LinOp<Rational> op(const LieElem& x) const;

  /// Left multiplication by the q-generator `id` (a PBW id), re-sorted.
  Vec multiply(int id, const BasisKey& k) const;

  /// All (mono, base) pairs of depth <= depth_bound.
  std::vector<std::pair<IntSeq, int>> keys(int depth_bound) const;

  /// Converts an element to this module's basis: for sl, diagonal parts at
  /// nonzero modes become Cartan generators (throws if a trace part remains).
  LieElem to_basis(const LieElem& x) const;

private:
  struct El {
    int mode, a, b;
  };
  using Terms = std::map<std::pair<IntSeq, int>, Rational>;

  static int id_of(const El& e) { return pbw_id(-e.mode, e.a, e.b); }
  static El el_of(int id) { return {-pbw_mode(id), pbw_row(id), pbw_col(id)}; }

  void bracket(const El& x, const El& y, std::vector<std::pair<El, Rational>>& out, Rational& central) const;
  Terms act_el(const El& g, const IntSeq& mono, int base) const;
  void act_terms(const El& g, const Terms& in, const Rational& c, Terms& out) const;

  GlModule U_;
  Rational level_;
  Flavor flavor_;
};

/// Representation property [g1, g2] v = g1 g2 v - g2 g1 v for generators with
/// modes in [lo, hi] on the module keys of depth <= depth.
CheckReport affine_rep_check(const InducedModule& M, int lo, int hi, int depth);

/// theta(x) on W = Laurent (x) (C^m)^{(x)N} (x) M:
/// E_cd t^j -> sum_q x_q^j E_cd^{(q)} + (action on M); C -> level.
LinOp<Rational> theta(int N, const InducedModule& M, const LieElem& x);
/// Action on the r-th loop factor (0 <= r < N) or on M (r == N).
LinOp<Rational> theta_r(int N, const InducedModule& M, int r, const LieElem& x);

/// Same bracket check through theta on the given W-keys.
CheckReport theta_rep_check(int N, const InducedModule& M, int lo, int hi, std::span<const BasisKey> keys);

}  // namespace cherednik

#endif  // CHEREDNIK_AFFINE_HPP
