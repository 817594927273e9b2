// JSON encodings shared by the CLI and the tests.  Rationals are strings
// ("p/q", or "n" when integral), baskets are sorted [[r,a],...] arrays and
// polynomials are coefficient arrays, lowest degree first.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qfano/basket.hpp"
#include "qfano/exactnum.hpp"
#include "qfano/search.hpp"

namespace qfano {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Polynomial& p);
Json to_json(const CycloRational& c);
Json to_json(const Basket& b);
Json to_json(const StageCounts& c);

/// One survivor: f, basket, A^3, A.c2/12, closed form and the first
/// `terms` Hilbert coefficients P_0..P_{terms-1}.
Json to_json(const FanoCandidate& c, std::size_t terms = 21);

Rational rational_from_json(const Json& j);
Basket basket_from_json(const Json& j);

const char* to_string(InequalityVariant v);
const char* to_string(TypeConvention c);

/// One compact JSON document per line.
void write_jsonl(std::ostream& out, const std::vector<Json>& records);
void write_baskets_jsonl(std::ostream& out, const std::vector<Basket>& baskets);
std::vector<Basket> read_baskets_jsonl(std::istream& in);

}  // namespace qfano
