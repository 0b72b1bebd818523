#include "a5/exactfield/json.hpp"

#include "a5/common/error.hpp"

namespace a5 {

void to_json(nlohmann::json& j, const Rational& q) { j = q.str(); }

void from_json(const nlohmann::json& j, Rational& q) {
  if (j.is_string()) {
    q = Rational::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    q = Rational(j.get<long long>());
  } else {
    fail(ErrorKind::ParseError, "rational must be a string \"p/q\"");
  }
}

void to_json(nlohmann::json& j, const AlgebraicNumber& a) {
  j = nlohmann::json::array();
  for (const auto& c : a.coefficients()) j.push_back(c.str());
}

void from_json(const nlohmann::json& j, AlgebraicNumber& a) {
  if (!j.is_array() || j.size() != AlgebraicNumber::kDegree)
    fail(ErrorKind::ParseError, "algebraic number must be an array of 16 rationals");
  std::array<Rational, AlgebraicNumber::kDegree> c;
  for (int k = 0; k < AlgebraicNumber::kDegree; ++k) c[k] = j[k].get<Rational>();
  a = AlgebraicNumber::from_coefficients(c);
}

void to_json(nlohmann::json& j, const Gaussian& g) { j = {{"re", g.re().str()}, {"im", g.im().str()}}; }

void from_json(const nlohmann::json& j, Gaussian& g) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    fail(ErrorKind::ParseError, "gaussian must be {\"re\",\"im\"}");
  g = Gaussian(j["re"].get<Rational>(), j["im"].get<Rational>());
}

void to_json(nlohmann::json& j, const QuadraticElement& q) {
  j = {{"a", q.a().str()}, {"b", q.b().str()}, {"D", q.D().get_str()}};
}

void from_json(const nlohmann::json& j, QuadraticElement& q) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("D"))
    fail(ErrorKind::ParseError, "quadratic element must be {\"a\",\"b\",\"D\"}");
  const Rational d = j["D"].get<Rational>();
  if (!d.is_integer()) fail(ErrorKind::ParseError, "D must be an integer");
  q = QuadraticElement(j["a"].get<Rational>(), j["b"].get<Rational>(), d.num());
}

}  // namespace a5
