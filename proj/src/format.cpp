#include "jstir/format.hpp"

namespace jstir {

namespace {

std::string monomial(std::string_view var, std::size_t deg) {
  if (deg == 0) return "";
  std::string s(var);
  if (deg > 1) s += "^" + std::to_string(deg);
  return s;
}

template <class T>
std::string render(const Poly<T>& p, std::string_view var, std::string_view times) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const T& c = p.coeffs()[i];
    if (sgn(c) == 0) continue;
    T mag = abs(c);
    if (sgn(c) < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (i == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) {
        out += mag.get_str();
        out += times;
      }
      out += monomial(var, i);
    }
  }
  return out;
}

}  // namespace

std::string to_text(const IntPoly& p, std::string_view var) { return render(p, var, ""); }

std::string to_text(const RatPoly& p, std::string_view var) { return render(p, var, "*"); }

nlohmann::json to_json(const IntPoly& p, std::string_view var) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return {{"var", std::string(var)}, {"coeffs", std::move(coeffs)}};
}

NamedPoly int_poly_from_json(const nlohmann::json& j) {
  auto bad = [](const std::string& why) {
    return Error(ErrorCode::kInvalidArgument, "polynomial JSON: " + why);
  };
  if (!j.is_object() || !j.contains("var") || !j.contains("coeffs")) {
    throw bad("expected object with \"var\" and \"coeffs\"");
  }
  if (!j["var"].is_string()) throw bad("\"var\" must be a string");
  if (!j["coeffs"].is_array()) throw bad("\"coeffs\" must be an array");
  std::vector<mpz_class> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw bad("coefficients must be decimal strings");
    mpz_class v;
    if (v.set_str(c.get<std::string>(), 10) != 0) throw bad("not an integer: " + c.dump());
    coeffs.push_back(std::move(v));
  }
  if (!coeffs.empty() && coeffs.back() == 0) throw bad("trailing zero coefficient");
  return {j["var"].get<std::string>(), IntPoly(std::move(coeffs))};
}

}  // namespace jstir
