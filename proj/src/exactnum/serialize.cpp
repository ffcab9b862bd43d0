#include "heckerep/exactnum/serialize.hpp"

#include <limits>

namespace heckerep {

nlohmann::json to_json(const Integer& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  throw std::invalid_argument("expected an integer");
}

nlohmann::json to_json(const CycNumber& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back({to_json(c.get_num()), to_json(c.get_den())});
  auto z = embed(x);
  return {{"order", x.order()}, {"coeffs", coeffs}, {"approx", {z.real(), z.imag()}}};
}

CycNumber cyc_from_json(const nlohmann::json& j) {
  const int order = j.at("order").get<int>();
  std::vector<Rational> c;
  for (const auto& pair : j.at("coeffs")) {
    Rational q(integer_from_json(pair.at(0)), integer_from_json(pair.at(1)));
    q.canonicalize();
    c.push_back(q);
  }
  return CycNumber::from_coeffs(order, c);
}

nlohmann::json to_json(const IntPolynomial& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

IntPolynomial int_poly_from_json(const nlohmann::json& j) {
  std::vector<Integer> c;
  for (const auto& v : j) c.push_back(integer_from_json(v));
  return IntPolynomial(std::move(c));
}

nlohmann::json to_json(const RatPolynomial& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p.coeffs()) a.push_back({to_json(c.get_num()), to_json(c.get_den())});
  return a;
}

nlohmann::json to_json(const CycPolynomial& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

nlohmann::json to_json(const ExactMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"order", m.order()}, {"entries", rows}};
}

ExactMatrix matrix_from_json(const nlohmann::json& j) {
  ExactMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(), j.at("order").get<int>());
  const auto& e = j.at("entries");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = cyc_from_json(e.at(i).at(k));
  return m;
}

}  // namespace heckerep
