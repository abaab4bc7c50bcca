#include "dehn/json_io.hpp"

namespace dehn {

nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  std::vector<Rational> v;
  for (const auto& c : j) v.push_back(parse_rational(c.get<std::string>()));
  return Polynomial(std::move(v));
}

nlohmann::json ratfunc_to_json(const RatFunc& f) {
  return {{"num", polynomial_to_json(f.num())}, {"den", polynomial_to_json(f.den())}, {"text", f.to_string()}};
}

RatFunc ratfunc_from_json(const nlohmann::json& j) {
  return RatFunc(polynomial_from_json(j.at("num")), polynomial_from_json(j.at("den")));
}

nlohmann::json matrix_to_json(const FieldMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(ratfunc_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace dehn
