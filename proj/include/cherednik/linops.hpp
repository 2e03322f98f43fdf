#ifndef CHEREDNIK_LINOPS_HPP
#define CHEREDNIK_LINOPS_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "cherednik/diff_frac.hpp"
#include "cherednik/rational.hpp"
#include "cherednik/report.hpp"

namespace cherednik {

using IntSeq = boost::container::small_vector<int, 4>;

// PBW factor ids. A factor is X t^{-k}; X = E_ab, or H_a = E_aa - E_{a+1,a+1}
// when b == kCartan. Ids order lexicographically by (k, a, b).
inline constexpr int kCartan = 255;
inline constexpr int pbw_id(int k, int a, int b) { return (k << 16) | (a << 8) | b; }
inline constexpr int pbw_mode(int id) { return id >> 16; }
inline constexpr int pbw_row(int id) { return (id >> 8) & 0xFF; }
inline constexpr int pbw_col(int id) { return id & 0xFF; }
// I t^{-k} (a == b == kCartan); only appears in normal forms of gl-induced modules.
inline constexpr int pbw_trace_id(int k) { return pbw_id(k, kCartan, kCartan); }
inline constexpr bool pbw_is_trace(int id) { return pbw_row(id) == kCartan; }
std::string pbw_str(int id);

/// Basis label shared by every space in the library. Unused parts are empty:
///   x    - exponent vector of a Laurent monomial,
///   word - tensor word (0-based letters) of (C^m)^{(x)N},
///   mono - sorted PBW monomial (factor ids) of an induced module,
///   base - basis index into the finite base module(s).
struct BasisKey {
  IntSeq x;
  IntSeq word;
  IntSeq mono;
  int base = 0;

  /// Total PBW degree (sum of the k's).
  int depth() const;

  friend bool operator==(const BasisKey& a, const BasisKey& b) {
    return a.base == b.base && a.x == b.x && a.word == b.word && a.mono == b.mono;
  }
  friend bool operator<(const BasisKey& a, const BasisKey& b) {
    return std::tie(a.x, a.word, a.mono, a.base) < std::tie(b.x, b.word, b.mono, b.base);
  }
};

std::string key_str(const BasisKey& k);

// Scalar hooks so FreeVector works over Rational and DiffFrac alike.
inline bool scalar_is_zero(const Rational& c) { return c.is_zero(); }
inline bool scalar_is_zero(const DiffFrac& c) { return c.is_zero(); }
inline std::string scalar_str(const Rational& c) { return c.str(); }
inline std::string scalar_str(const DiffFrac& c) { return c.str(); }

/// Finite linear combination of basis keys; no zero coefficient is stored.
template <typename S>
class FreeVector {
public:
  using Terms = std::map<BasisKey, S>;

  FreeVector() = default;
  FreeVector(const BasisKey& k, S c) { add_term(k, std::move(c)); }

  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const BasisKey& k, const S& c) {
    if (scalar_is_zero(c)) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
      return;
    }
    it->second = it->second + c;
    if (scalar_is_zero(it->second)) terms_.erase(it);
  }
  void add_term(BasisKey&& k, const S& c) {
    if (scalar_is_zero(c)) return;
    auto it = terms_.lower_bound(k);
    if (it == terms_.end() || it->first < k || k < it->first) {
      terms_.emplace_hint(it, std::move(k), c);
      return;
    }
    it->second = it->second + c;
    if (scalar_is_zero(it->second)) terms_.erase(it);
  }

  /// this += c * v
  FreeVector& axpy(const Rational& c, const FreeVector& v) {
    if (c.is_zero()) return *this;
    for (const auto& [k, s] : v.terms_) add_term(k, s * c);
    return *this;
  }
  FreeVector& operator+=(const FreeVector& v) {
    for (const auto& [k, s] : v.terms_) add_term(k, s);
    return *this;
  }
  FreeVector& operator-=(const FreeVector& v) { return axpy(Rational(-1), v); }

  friend FreeVector operator+(FreeVector a, const FreeVector& b) { return a += b; }
  friend FreeVector operator-(FreeVector a, const FreeVector& b) { return a -= b; }
  friend FreeVector operator*(const Rational& c, const FreeVector& v) {
    FreeVector r;
    return r.axpy(c, v);
  }
  friend bool operator==(const FreeVector& a, const FreeVector& b) { return (a - b).is_zero(); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += "(" + scalar_str(c) + ")*" + key_str(k);
    }
    return out;
  }

private:
  Terms terms_;
};

using Vec = FreeVector<Rational>;
using ExtVec = FreeVector<DiffFrac>;

/// Locally finite linear operator given by its values on basis keys.
template <typename S>
class LinOp {
public:
  using Fn = std::function<FreeVector<S>(const BasisKey&)>;

  LinOp() = default;
  LinOp(std::string name, Fn fn) : name_(std::move(name)), fn_(std::make_shared<Fn>(std::move(fn))) {}

  const std::string& name() const { return name_; }
  FreeVector<S> operator()(const BasisKey& k) const { return (*fn_)(k); }
  FreeVector<S> apply(const FreeVector<S>& v) const {
    FreeVector<S> out;
    for (const auto& [k, c] : v.terms()) {
      const auto img = (*fn_)(k);
      for (const auto& [k2, c2] : img.terms()) out.add_term(k2, c2 * c);
    }
    return out;
  }

private:
  std::string name_;
  std::shared_ptr<const Fn> fn_;
};

/// Identity; `nvars` is the number of variables of DiffFrac coefficients.
template <typename S>
LinOp<S> identity_op(int nvars = 0) {
  return LinOp<S>("id", [nvars](const BasisKey& k) {
    if constexpr (std::is_same_v<S, Rational>) return FreeVector<S>(k, Rational(1));
    else return FreeVector<S>(k, DiffFrac::constant(nvars, 1));
  });
}

template <typename S>
LinOp<S> zero_op() {
  return LinOp<S>("0", [](const BasisKey&) { return FreeVector<S>(); });
}

/// a o b
template <typename S>
LinOp<S> compose(const LinOp<S>& a, const LinOp<S>& b) {
  return LinOp<S>("(" + a.name() + ")(" + b.name() + ")",
                  [a, b](const BasisKey& k) { return a.apply(b(k)); });
}

template <typename S>
LinOp<S> operator+(const LinOp<S>& a, const LinOp<S>& b) {
  return LinOp<S>(a.name() + " + " + b.name(), [a, b](const BasisKey& k) {
    auto v = a(k);
    v += b(k);
    return v;
  });
}

template <typename S>
LinOp<S> operator*(const Rational& c, const LinOp<S>& a) {
  return LinOp<S>(c.str() + "*(" + a.name() + ")", [c, a](const BasisKey& k) {
    FreeVector<S> v;
    return v.axpy(c, a(k));
  });
}

template <typename S>
LinOp<S> operator-(const LinOp<S>& a, const LinOp<S>& b) {
  return a + Rational(-1) * b;
}

/// [a, b] = a o b - b o a
template <typename S>
LinOp<S> commutator(const LinOp<S>& a, const LinOp<S>& b) {
  return LinOp<S>("[" + a.name() + ", " + b.name() + "]", [a, b](const BasisKey& k) {
    auto v = a.apply(b(k));
    v -= b.apply(a(k));
    return v;
  });
}

/// Sum of a list of operators.
template <typename S>
LinOp<S> sum(std::vector<LinOp<S>> ops, std::string name) {
  return LinOp<S>(std::move(name), [ops = std::move(ops)](const BasisKey& k) {
    FreeVector<S> v;
    for (const auto& op : ops) v += op(k);
    return v;
  });
}

/// Reference implementation: applies both sides to every key in order.
template <typename S>
CheckReport check_identity_serial(const std::string& check, const LinOp<S>& lhs,
                                  const LinOp<S>& rhs, std::span<const BasisKey> keys) {
  CheckReport rep;
  rep.name = check;
  for (const auto& k : keys) {
    rep.count(check);
    const auto l = lhs(k);
    const auto r = rhs(k);
    if (!(l - r).is_zero()) rep.fail({check, key_str(k), r.str(), l.str()});
  }
  return rep;
}

/// Parallel version over keys (OpenMP). Produces a report identical to
/// check_identity_serial: per-key outcomes are merged in key order.
template <typename S>
CheckReport check_identity(const std::string& check, const LinOp<S>& lhs, const LinOp<S>& rhs,
                           std::span<const BasisKey> keys) {
  const long n = static_cast<long>(keys.size());
  std::vector<std::optional<Failure>> outcome(n);
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    try {
      const auto l = lhs(keys[i]);
      const auto r = rhs(keys[i]);
      if (!(l - r).is_zero()) outcome[i] = Failure{check, key_str(keys[i]), r.str(), l.str()};
    } catch (...) {
#pragma omp critical(cherednik_check_identity)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  CheckReport rep;
  rep.name = check;
  rep.count(check, n);
  for (auto& f : outcome)
    if (f) rep.fail(std::move(*f));
  return rep;
}

/// check_identity merged into `rep`; `tag` (e.g. "p=1 q=2") prefixes each
/// failure's input so witnesses name the instance.
template <typename S>
void check_into(CheckReport& rep, const std::string& check, const std::string& tag,
                const LinOp<S>& lhs, const LinOp<S>& rhs, std::span<const BasisKey> keys) {
  auto r = check_identity(check, lhs, rhs, keys);
  if (!tag.empty())
    for (auto& f : r.failures) f.input = tag + " " + f.input;
  rep.merge(r);
}

/// Runs `fn(key)` for each key in parallel and merges the per-key reports in
/// key order (deterministic regardless of thread count).
CheckReport for_each_key(std::span<const BasisKey> keys,
                         const std::function<CheckReport(const BasisKey&)>& fn);

/// Describes a bounded basis: Laurent/polynomial x-part over a window,
/// tensor words, and an explicit list of module keys.
struct SpaceDesc {
  int nvars = 0;            // 0 = no x-part
  int x_lo = 0, x_hi = 0;   // per-variable exponent window
  int total_degree = -1;    // >= 0: keep x with nonnegative exponents and sum <= total_degree
  int word_len = 0;         // 0 = no word
  int alphabet = 0;         // letters 0..alphabet-1
  /// (mono, base) pairs; empty means a single key with empty mono and base 0.
  std::vector<std::pair<IntSeq, int>> module_keys;
};

inline constexpr long kExhaustiveLimit = 10000;

/// Size of the bounded basis described by `space`.
long basis_size(const SpaceDesc& space);

/// Exhaustive enumeration when the bounded basis has at most kExhaustiveLimit
/// keys, otherwise `count` distinct keys drawn with a seeded generator.
/// Throws std::invalid_argument on an empty basis or count < 1.
std::vector<BasisKey> sample_basis(const SpaceDesc& space, long count, std::uint64_t seed);

/// At most `count` distinct keys of `keys`, chosen with a seeded generator and
/// kept in their original order.
std::vector<BasisKey> subsample(const std::vector<BasisKey>& keys, long count, std::uint64_t seed);

}  // namespace cherednik

#endif  // CHEREDNIK_LINOPS_HPP
