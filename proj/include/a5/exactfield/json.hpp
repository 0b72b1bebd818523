#pragma once

#include <json.hpp>

#include "a5/exactfield/cyclotomic.hpp"
#include "a5/exactfield/gaussian.hpp"
#include "a5/exactfield/quadratic.hpp"
#include "a5/exactfield/rational.hpp"

namespace a5 {

void to_json(nlohmann::json& j, const Rational& q);
void from_json(const nlohmann::json& j, Rational& q);
void to_json(nlohmann::json& j, const AlgebraicNumber& a);
void from_json(const nlohmann::json& j, AlgebraicNumber& a);
void to_json(nlohmann::json& j, const Gaussian& g);
void from_json(const nlohmann::json& j, Gaussian& g);
void to_json(nlohmann::json& j, const QuadraticElement& q);
void from_json(const nlohmann::json& j, QuadraticElement& q);

}  // namespace a5
