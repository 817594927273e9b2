#include "qfano/io.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "qfano/rr.hpp"

namespace qfano {

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(to_json(p.coeff(i)));
  return arr;
}

Json to_json(const CycloRational& c) {
  Json j;
  j["numerator"] = to_json(c.numerator());
  j["denominator_exponents"] = c.denominator_exponents();
  return j;
}

Json to_json(const Basket& b) {
  Json arr = Json::array();
  for (const auto& p : b) arr.push_back(Json::array({p.r, p.a}));
  return arr;
}

Json to_json(const StageCounts& c) {
  Json j;
  j["c1"] = c.c1;
  j["c2"] = c.c2;
  j["c3"] = c.c3;
  j["c4"] = c.c4;
  j["c5"] = c.c5;
  j["inequality_before_vanishing"] = c.inequality_before_vanishing;
  return j;
}

Json to_json(const FanoCandidate& c, std::size_t terms) {
  Json j;
  j["f"] = c.f;
  j["basket"] = to_json(c.basket);
  j["a_cubed"] = to_json(c.numerics.a_cubed);
  j["ac2_over_12"] = to_json(c.numerics.ac2_over_12);
  j["index_integral"] = c.index_integral;
  Json coeffs = Json::array();
  if (terms > 0) {
    for (const auto& q : hilbert_coeffs(c.numerics, terms - 1)) coeffs.push_back(to_json(q));
  }
  j["hilbert_coefficients"] = coeffs;
  j["hilbert_closed_form"] = to_json(c.hilbert);
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

Basket basket_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("basket must be a JSON array");
  std::vector<QuotientSingularity> pts;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw std::invalid_argument("basket entries must be [r, a] integer pairs, got " + e.dump());
    }
    pts.push_back(canonicalize(e[0].get<int>(), e[1].get<long long>()));
  }
  return Basket(std::move(pts));
}

const char* to_string(InequalityVariant v) {
  return v == InequalityVariant::paper ? "paper" : "appendix";
}

const char* to_string(TypeConvention c) {
  return c == TypeConvention::half_range ? "half" : "full";
}

void write_jsonl(std::ostream& out, const std::vector<Json>& records) {
  for (const auto& r : records) out << r.dump() << '\n';
}

void write_baskets_jsonl(std::ostream& out, const std::vector<Basket>& baskets) {
  for (const auto& b : baskets) out << to_json(b).dump() << '\n';
}

std::vector<Basket> read_baskets_jsonl(std::istream& in) {
  std::vector<Basket> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(basket_from_json(Json::parse(line)));
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace qfano
