#include "a5/verify/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "a5/common/error.hpp"

#ifndef A5_FIXTURES_DEFAULT
#define A5_FIXTURES_DEFAULT "data/fixtures.json"
#endif

namespace a5 {

std::string Fixtures::default_path() {
  if (const char* env = std::getenv("ICOSA_FIXTURES"); env && *env) return env;
  return A5_FIXTURES_DEFAULT;
}

Fixtures Fixtures::load(const std::optional<std::string>& path) {
  Fixtures fx;
  fx.path_ = path ? *path : default_path();
  std::ifstream in(fx.path_);
  if (!in) fail(ErrorKind::ParseError, "cannot open fixtures file " + fx.path_);
  try {
    fx.doc_ = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, "fixtures file " + fx.path_ + ": " + e.what());
  }
  return fx;
}

const nlohmann::json& Fixtures::at(const std::string& pointer) const {
  const nlohmann::json* node = &doc_;
  std::stringstream ss(pointer);
  std::string key;
  while (std::getline(ss, key, '/')) {
    if (!node->is_object() || !node->contains(key))
      fail(ErrorKind::ParseError, "fixtures entry '" + pointer + "' is missing");
    node = &(*node)[key];
  }
  return *node;
}

namespace {

Rational power_product(const std::string& text) {
  Rational acc(1);
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    const auto caret = factor.find('^');
    if (caret == std::string::npos) {
      acc *= Rational::parse(factor);
    } else {
      const Rational base = Rational::parse(factor.substr(0, caret));
      acc *= pow(base, std::stol(factor.substr(caret + 1)));
    }
  }
  return acc;
}

std::string as_text(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(ErrorKind::ParseError, "expected a number or numeric string, got " + j.dump());
}

int as_exponent(const nlohmann::json& j) {
  if (!j.is_number_integer() || j.get<int>() < 0) fail(ErrorKind::ParseError, "bad exponent " + j.dump());
  return j.get<int>();
}

}  // namespace

Rational parse_constant(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return power_product(text);
  return power_product(text.substr(0, slash)) / power_product(text.substr(slash + 1));
}

Poly<Rational> sparse_poly(const nlohmann::json& j) {
  Poly<Rational> p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) fail(ErrorKind::ParseError, "bad sparse term " + t.dump());
    p += Poly<Rational>::monomial(parse_constant(as_text(t[1])), as_exponent(t[0]));
  }
  return p;
}

GaussianPoly sparse_gaussian_poly(const nlohmann::json& j) {
  GaussianPoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) fail(ErrorKind::ParseError, "bad sparse term " + t.dump());
    const Gaussian c(parse_constant(as_text(t[1])), parse_constant(as_text(t[2])));
    p += GaussianPoly::monomial(c, as_exponent(t[0]));
  }
  return p;
}

GaussianPoly gaussian_product(const nlohmann::json& factors) {
  GaussianPoly p(Gaussian(1));
  for (const auto& f : factors) p *= sparse_gaussian_poly(f);
  return p;
}

QFunction factored_function(const nlohmann::json& j) {
  auto product = [](const nlohmann::json& list) {
    Poly<Rational> p(1);
    for (const auto& f : list) p *= pow(sparse_poly(f.at("poly")), as_exponent(f.at("exp")));
    return p;
  };
  const Rational c = parse_constant(as_text(j.at("constant")));
  return QFunction(product(j.at("num")) * c, product(j.at("den")));
}

Bivariate<Rational> sparse_bivariate(const nlohmann::json& j) {
  int dx = 0, dy = 0;
  for (const auto& t : j) {
    dx = std::max(dx, as_exponent(t.at(0)));
    dy = std::max(dy, as_exponent(t.at(1)));
  }
  std::vector<std::vector<Rational>> c(dx + 1, std::vector<Rational>(dy + 1));
  for (const auto& t : j) c[t[0].get<int>()][t[1].get<int>()] += parse_constant(as_text(t.at(2)));
  return Bivariate<Rational>(std::move(c));
}

Poly<Rational> quadratic_row(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) fail(ErrorKind::ParseError, "bad quadratic row " + j.dump());
  return Poly<Rational>{parse_constant(as_text(j[2])), parse_constant(as_text(j[1])), parse_constant(as_text(j[0]))};
}

}  // namespace a5
