#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "jstir/exactpoly.hpp"

namespace jstir {

// Ascending-degree human form: "t+14t^2+21t^3+4t^4", "-1-z", "0".
std::string to_text(const IntPoly& p, std::string_view var);
// Rational coefficients render as "1/6*n".
std::string to_text(const RatPoly& p, std::string_view var);

// {"var": "t", "coeffs": ["0","1","1"]}; coefficients are exact decimal
// strings, ascending degree.
nlohmann::json to_json(const IntPoly& p, std::string_view var);

struct NamedPoly {
  std::string var;
  IntPoly poly;
};
// Inverse of to_json. Throws kInvalidArgument on malformed input, including
// a non-canonical trailing zero.
NamedPoly int_poly_from_json(const nlohmann::json& j);

}  // namespace jstir
