#include "ppdiamond/serialize.hpp"

namespace ppd {

nlohmann::ordered_json to_json(const QuasiPolynomial& q) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : q.coefficients()) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& c : row) r.push_back(to_string(c));
    rows.push_back(std::move(r));
  }
  return {{"period", q.period()}, {"degree", q.degree()}, {"valid_from", q.valid_from()}, {"coeffs", rows}};
}

QuasiPolynomial quasipoly_from_json(const nlohmann::ordered_json& j) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j.at("coeffs")) {
    auto& row = rows.emplace_back();
    for (const auto& c : r) row.push_back(parse_rational(c.get<std::string>()));
  }
  return QuasiPolynomial(j.at("period").get<std::int64_t>(), j.at("degree").get<int>(),
                         j.at("valid_from").get<std::int64_t>(), std::move(rows));
}

nlohmann::ordered_json to_json(const Polynomial& p) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

}  // namespace ppd
