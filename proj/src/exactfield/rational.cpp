#include "a5/exactfield/rational.hpp"

#include <cctype>

#include "a5/common/error.hpp"

namespace a5 {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) fail(ErrorKind::ParseError, "empty rational");
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view s, bool allow_sign) {
    std::string buf(s);
    std::size_t start = 0;
    if (allow_sign && !buf.empty() && (buf[0] == '-' || buf[0] == '+')) start = 1;
    if (start == buf.size()) fail(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    for (std::size_t i = start; i < buf.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(buf[i])))
        fail(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    if (buf[0] == '+') buf.erase(0, 1);
    return Integer(buf, 10);
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text, true));
  const Integer num = parse_int(text.substr(0, slash), true);
  const Integer den = parse_int(text.substr(slash + 1), false);
  return Rational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  Rational r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.value().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.value().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(n, d));
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

}  // namespace a5
