#ifndef CHEREDNIK_PERM_HPP
#define CHEREDNIK_PERM_HPP

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cherednik/rational.hpp"

namespace cherednik {

/// Permutation of {0, ..., N-1} stored in one-line notation: images()[i] = s(i).
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);
  /// Swaps p and q (0-based).
  static Perm transposition(int p, int q, int n);
  /// Adjacent transposition swapping p and p+1.
  static Perm simple(int p, int n) { return transposition(p, p + 1, n); }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;
  /// Number of inversions (Coxeter length).
  int length() const;

  /// Composition (a * b)(i) = a(b(i)).
  friend Perm operator*(const Perm& a, const Perm& b);

  /// One-line notation with 1-based images, e.g. "[2,1,3]".
  std::string str() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  std::vector<int> images_;
};

/// All N! permutations, in lexicographic order of one-line notation.
std::vector<Perm> all_perms(int n);

/// (K, N-K)-shuffles: the minimal-length representatives of the left cosets
/// s Sym_{K,N-K}, i.e. permutations increasing on {0..K-1} and on {K..N-1}.
std::vector<Perm> coset_reps(int k, int n);

/// Element of the group algebra Q[Sym_N] with no zero coefficients stored.
class GroupAlgElem {
public:
  GroupAlgElem() = default;
  explicit GroupAlgElem(int n) : n_(n) {}
  GroupAlgElem(const Perm& s, Rational coeff = 1);

  int degree() const { return n_; }
  const std::map<Perm, Rational>& terms() const& { return terms_; }
  std::map<Perm, Rational> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Perm& s) const;

  void add_term(const Perm& s, const Rational& c);

  friend GroupAlgElem operator+(const GroupAlgElem& a, const GroupAlgElem& b);
  friend GroupAlgElem operator*(const GroupAlgElem& a, const GroupAlgElem& b);
  friend GroupAlgElem operator*(const Rational& c, const GroupAlgElem& a);
  friend bool operator==(const GroupAlgElem&, const GroupAlgElem&) = default;

  std::string str() const;

private:
  int n_ = 0;
  std::map<Perm, Rational> terms_;
};

}  // namespace cherednik

#endif  // CHEREDNIK_PERM_HPP
