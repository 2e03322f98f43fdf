#include "cherednik/rational.hpp"

#include <cctype>

namespace cherednik {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!valid_integer(num))
    throw std::invalid_argument("Rational::parse: bad numerator in '" + std::string(text) + "'");
  mpq_class v;
  if (slash == std::string_view::npos) {
    v = mpq_class(to_mpz(num));
  } else {
    const auto den = text.substr(slash + 1);
    if (!valid_integer(den) || den[0] == '-' || den[0] == '+')
      throw std::invalid_argument("Rational::parse: bad denominator in '" + std::string(text) + "'");
    mpz_class d = to_mpz(den);
    if (d == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    v = mpq_class(to_mpz(num), d);
  }
  return Rational(std::move(v));
}

std::string Rational::str() const {
  if (is_integer()) return numerator_str();
  return numerator_str() + "/" + denominator_str();
}

}  // namespace cherednik
