#pragma once

#include <string>

#include "a5/exactfield/json.hpp"
#include "a5/polyring/bivariate.hpp"
#include "a5/polyring/rational_function.hpp"

namespace a5 {

template <FieldElement F>
nlohmann::json poly_to_json(const Poly<F>& p, const std::string& var = "x") {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c);
  return {{"var", var}, {"coeffs", coeffs}};
}

template <FieldElement F>
Poly<F> poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    fail(ErrorKind::ParseError, "polynomial must be {\"var\",\"coeffs\"}");
  std::vector<F> c;
  for (const auto& e : j["coeffs"]) c.push_back(e.get<F>());
  return Poly<F>(std::move(c));
}

template <FieldElement F>
nlohmann::json rational_function_to_json(const RationalFunction<F>& f, const std::string& var = "x") {
  return {{"num", poly_to_json(f.num(), var)}, {"den", poly_to_json(f.den(), var)}};
}

template <FieldElement F>
RationalFunction<F> rational_function_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    fail(ErrorKind::ParseError, "rational function must be {\"num\",\"den\"}");
  return RationalFunction<F>(poly_from_json<F>(j["num"]), poly_from_json<F>(j["den"]));
}

/// Bivariate polynomial as a list of {"i","j","c"} monomials (x-degree i, y-degree j).
template <FieldElement F>
nlohmann::json bivariate_to_json(const Bivariate<F>& p, const std::string& x, const std::string& y) {
  nlohmann::json terms = nlohmann::json::array();
  for (int i = p.degree_x(); i >= 0; --i)
    for (int j = static_cast<int>(p.rows()[i].size()) - 1; j >= 0; --j)
      if (!is_zero(p.rows()[i][j])) terms.push_back({{x, i}, {y, j}, {"c", p.rows()[i][j]}});
  return {{"vars", {x, y}}, {"terms", terms}};
}

}  // namespace a5
