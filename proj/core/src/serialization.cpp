#include "hasym/serialization.hpp"

#include <string>
#include <vector>

namespace hasym {

using nlohmann::json;

json to_json(const RationalSeries& s) {
  json coeffs = json::array();
  for (const auto& q : s.coeffs()) coeffs.push_back({numerator_string(q), denominator_string(q)});
  return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

json to_json(const BivariatePoly& p) {
  json terms = json::array();
  for (const auto& [k, v] : p.terms()) {
    terms.push_back({{"c_pow", k.first},
                     {"z_pow", k.second},
                     {"num", numerator_string(v)},
                     {"den", denominator_string(v)}});
  }
  return json{{"terms", std::move(terms)}};
}

RationalSeries series_from_json(const json& j) {
  try {
    const auto order = j.at("order").get<std::size_t>();
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != order + 1) {
      throw DomainError("series JSON: coeffs length must be order + 1");
    }
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& pair : coeffs) {
      if (!pair.is_array() || pair.size() != 2) throw DomainError("series JSON: coefficient must be [num, den]");
      c.push_back(make_rational(pair[0].get<std::string>(), pair[1].get<std::string>()));
    }
    return RationalSeries(std::move(c));
  } catch (const json::exception& e) {
    throw DomainError(std::string("series JSON: ") + e.what());
  }
}

BivariatePoly poly_from_json(const json& j) {
  try {
    BivariatePoly p;
    for (const auto& t : j.at("terms")) {
      const int cp = t.at("c_pow").get<int>();
      const int zp = t.at("z_pow").get<int>();
      if (cp < 0 || zp < 0) throw DomainError("polynomial JSON: negative power");
      p += BivariatePoly::monomial(make_rational(t.at("num").get<std::string>(), t.at("den").get<std::string>()), cp, zp);
    }
    return p;
  } catch (const json::exception& e) {
    throw DomainError(std::string("polynomial JSON: ") + e.what());
  }
}

}  // namespace hasym
