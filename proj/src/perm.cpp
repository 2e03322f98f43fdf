#include "cherednik/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cherednik {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[v])
      throw std::invalid_argument("Perm: images are not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Perm(std::move(im));
}

Perm Perm::transposition(int p, int q, int n) {
  if (p < 0 || q < 0 || p >= n || q >= n || p == q)
    throw std::out_of_range("Perm::transposition: bad indices");
  auto s = identity(n);
  std::swap(s.images_[p], s.images_[q]);
  return s;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
  Perm r;
  r.images_ = std::move(inv);
  return r;
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Perm::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Perm: degree mismatch");
  std::vector<int> im(a.size());
  for (int i = 0; i < a.size(); ++i) im[i] = a.images_[b.images_[i]];
  Perm r;
  r.images_ = std::move(im);
  return r;
}

std::string Perm::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < size(); ++i) os << (i ? "," : "") << images_[i] + 1;
  os << ']';
  return os.str();
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::vector<Perm> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::vector<Perm> coset_reps(int k, int n) {
  if (k < 0 || k > n) throw std::out_of_range("coset_reps: need 0 <= K <= N");
  // Choose the image set of {0..K-1}; the shuffle is increasing on both blocks.
  std::vector<char> mask(n, 0);
  std::fill(mask.begin(), mask.begin() + k, 1);
  std::vector<Perm> out;
  do {
    std::vector<int> im(n);
    int lo = 0, hi = k;
    for (int v = 0; v < n; ++v) {
      if (mask[v]) im[lo++] = v;
      else im[hi++] = v;
    }
    out.emplace_back(std::move(im));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end(),
            [](const Perm& a, const Perm& b) {
              return a.length() != b.length() ? a.length() < b.length() : a < b;
            });
  return out;
}

GroupAlgElem::GroupAlgElem(const Perm& s, Rational coeff) : n_(s.size()) {
  add_term(s, coeff);
}

Rational GroupAlgElem::coeff(const Perm& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgElem::add_term(const Perm& s, const Rational& c) {
  if (c.is_zero()) return;
  if (terms_.empty() && n_ == 0) n_ = s.size();
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupAlgElem operator+(const GroupAlgElem& a, const GroupAlgElem& b) {
  GroupAlgElem r = a;
  if (r.n_ == 0) r.n_ = b.n_;
  for (const auto& [s, c] : b.terms_) r.add_term(s, c);
  return r;
}

GroupAlgElem operator*(const GroupAlgElem& a, const GroupAlgElem& b) {
  GroupAlgElem r(a.n_ ? a.n_ : b.n_);
  for (const auto& [s, c] : a.terms_)
    for (const auto& [t, d] : b.terms_) r.add_term(s * t, c * d);
  return r;
}

GroupAlgElem operator*(const Rational& c, const GroupAlgElem& a) {
  GroupAlgElem r(a.n_);
  for (const auto& [s, d] : a.terms_) r.add_term(s, c * d);
  return r;
}

std::string GroupAlgElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*" << s.str();
  }
  return os.str();
}

}  // namespace cherednik
