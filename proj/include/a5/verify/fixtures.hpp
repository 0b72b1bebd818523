#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "a5/decomp/decomp.hpp"
#include "a5/polyring/bivariate.hpp"

namespace a5 {

/// Printed reference data. The path comes from ICOSA_FIXTURES when set, else the build-time default.
class Fixtures {
 public:
  static Fixtures load(const std::optional<std::string>& path = std::nullopt);
  static std::string default_path();

  const std::string& path() const { return path_; }
  const nlohmann::json& doc() const { return doc_; }
  /// Member lookup by '/'-separated path; ParseError when absent.
  const nlohmann::json& at(const std::string& pointer) const;

 private:
  std::string path_;
  nlohmann::json doc_;
};

/// "p/q", "n", or a product of powers such as "2^31*5^15".
Rational parse_constant(const std::string& text);

/// [[exponent, "c"], ...]
Poly<Rational> sparse_poly(const nlohmann::json& j);
/// [[exponent, "re", "im"], ...]
GaussianPoly sparse_gaussian_poly(const nlohmann::json& j);
/// Product of a list of sparse Gaussian polynomials.
GaussianPoly gaussian_product(const nlohmann::json& factors);
/// {"constant": c, "num": [{"poly": p, "exp": e}, ...], "den": [...]}
QFunction factored_function(const nlohmann::json& j);
/// [[i, j, "c"], ...] as the coefficient of x^i y^j.
Bivariate<Rational> sparse_bivariate(const nlohmann::json& j);
/// ["a", "b", "c"] as a t^2 + b t + c.
Poly<Rational> quadratic_row(const nlohmann::json& j);

}  // namespace a5
