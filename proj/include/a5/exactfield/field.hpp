#pragma once

#include <concepts>
#include <string>

#include "a5/exactfield/rational.hpp"

namespace a5 {

template <class F>
concept FieldElement = std::regular<F> && requires(const F a, const F b, const Rational q) {
  F(q);
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

namespace detail {

// Unqualified call so that overloads declared after this header are found by ADL.
template <class F>
bool field_is_zero(const F& x) {
  return is_zero(x);
}

}  // namespace detail

}  // namespace a5
