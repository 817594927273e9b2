#include "qfano/basket.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace qfano {

QuotientSingularity canonicalize(int r, long long a_raw) {
  if (r < 2) throw std::invalid_argument("basket point needs r >= 2, got r = " + std::to_string(r));
  long long a = mod_floor(a_raw, r);
  if (a == 0 || gcd_ll(a, r) != 1) {
    throw NonTerminalError("non-terminal type 1/" + std::to_string(r) + "(1," +
                           std::to_string(a_raw) + ",-" + std::to_string(a_raw) + ")");
  }
  if (2 * a > r) a = r - a;
  return {r, static_cast<int>(a)};
}

Basket::Basket(std::vector<QuotientSingularity> points) : points_(std::move(points)) {
  for (const auto& p : points_) {
    if (p.r < 2 || p.a < 1 || p.a >= p.r || gcd_ll(p.r, p.a) != 1) {
      throw NonTerminalError("invalid basket point [" + std::to_string(p.r) + "," +
                             std::to_string(p.a) + "]");
    }
  }
  std::sort(points_.begin(), points_.end());
}

Basket Basket::canonical() const {
  std::vector<QuotientSingularity> pts;
  pts.reserve(points_.size());
  for (const auto& p : points_) pts.push_back(canonicalize(p.r, p.a));
  return Basket(std::move(pts));
}

std::vector<int> Basket::indices() const {
  std::vector<int> rs;
  rs.reserve(points_.size());
  for (const auto& p : points_) rs.push_back(p.r);
  return rs;
}

Rational sigma(const Basket& basket) {
  Rational s;
  for (const auto& p : basket) s += Rational(static_cast<long long>(p.r) * p.r - 1, p.r);
  return s;
}

long long lcm_index(const Basket& basket) {
  long long l = 1;
  for (const auto& p : basket) l = lcm_ll(l, p.r);
  return l;
}

namespace {

struct PointWeight {
  QuotientSingularity point;
  Rational weight;  // r - 1/r
};

void enumerate_from(const std::vector<PointWeight>& types, std::size_t start,
                    std::vector<QuotientSingularity>& current, const Rational& running,
                    const Rational& bound, std::vector<Basket>& out) {
  out.emplace_back(current);
  for (std::size_t i = start; i < types.size(); ++i) {
    Rational next = running + types[i].weight;
    // Weights are nondecreasing along `types`, so nothing later fits either.
    if (next >= bound) break;
    current.push_back(types[i].point);
    enumerate_from(types, i, current, next, bound, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Basket> enumerate_baskets(const Rational& bound, TypeConvention convention) {
  if (bound.sign() <= 0) throw std::invalid_argument("basket bound must be positive");
  std::vector<PointWeight> types;
  for (int r = 2;; ++r) {
    Rational w(static_cast<long long>(r) * r - 1, r);
    if (w >= bound) break;
    const int a_max = convention == TypeConvention::half_range ? r / 2 : r - 1;
    for (int a = 1; a <= a_max; ++a) {
      if (gcd_ll(r, a) == 1) types.push_back({{r, a}, w});
    }
  }
  std::vector<Basket> out;
  std::vector<QuotientSingularity> current;
  enumerate_from(types, 0, current, Rational(), bound, out);
  return out;
}

std::string to_cli_string(const Basket& basket) {
  std::string s;
  for (const auto& p : basket) {
    if (!s.empty()) s += ';';
    s += std::to_string(p.r) + "," + std::to_string(p.a);
  }
  return s;
}

std::string to_display_string(const Basket& basket) {
  std::string s = "{";
  bool first = true;
  for (const auto& p : basket) {
    if (!first) s += ",";
    first = false;
    s += "[" + std::to_string(p.r) + "," + std::to_string(p.a) + "]";
  }
  return s + "}";
}

Basket parse_basket(std::string_view text) {
  const auto parse_int = [&](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw std::invalid_argument("malformed basket '" + std::string(text) +
                                  "': expected \"r,a;r,a;...\"");
    }
    return v;
  };
  std::vector<QuotientSingularity> pts;
  if (text.find_first_not_of(' ') == std::string_view::npos) return Basket();
  std::size_t start = 0;
  for (;;) {
    const auto semi = text.find(';', start);
    const std::string_view item = text.substr(start, semi == std::string_view::npos ? semi : semi - start);
    if (item.find_first_not_of(' ') == std::string_view::npos) {
      throw std::invalid_argument("malformed basket '" + std::string(text) + "': empty point");
    }
    const auto comma = item.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("malformed basket '" + std::string(text) + "': point '" +
                                  std::string(item) + "' lacks a comma");
    }
    const long long r = parse_int(item.substr(0, comma));
    const long long a = parse_int(item.substr(comma + 1));
    if (r < 2 || r > 1'000'000) {
      throw std::invalid_argument("basket point index out of range: r = " + std::to_string(r));
    }
    pts.push_back(canonicalize(static_cast<int>(r), a));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return Basket(std::move(pts));
}

}  // namespace qfano
