#include "holweitz/rational.hpp"

#include <stdexcept>

namespace holweitz {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n.front() == '+') n.erase(0, 1);
  mpz_class zn(n), zd{std::string(den)};
  if (zd == 0) throw std::invalid_argument("Rational: zero denominator");
  mpq_class q(zn, zd);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

}  // namespace holweitz
