#include <doctest.h>

#include <random>

#include "qfano/io.hpp"
#include "qfano/rr.hpp"
#include "qfano/search.hpp"

using namespace qfano;

namespace {

const std::vector<Basket>& all_baskets() {
  static const auto b = enumerate_baskets();
  return b;
}

bool coprime(int f, const Basket& b) {
  for (const auto& p : b) {
    if (gcd_ll(f, p.r) != 1) return false;
  }
  return true;
}

// Random (f, basket) pairs with gcd(f, r_k) = 1 and f >= 3, plus a random
// positive A^3 so that the identities are exercised off the forced value.
std::vector<FanoNumerics> random_numerics(std::size_t count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, all_baskets().size() - 1);
  std::uniform_int_distribution<int> pick_f(3, 50), num(1, 200), den(1, 500);
  std::vector<FanoNumerics> out;
  while (out.size() < count) {
    const Basket& b = all_baskets()[pick(rng)];
    const int f = pick_f(rng);
    if (!coprime(f, b)) continue;
    out.push_back(rng() % 2 ? make_numerics(f, b) : make_numerics(f, b, Rational(num(rng), den(rng))));
  }
  return out;
}

std::vector<FanoCandidate> survivors_for(const std::vector<int>& fs) {
  std::vector<FanoCandidate> out;
  SearchConfig cfg;
  for (int f : fs) {
    auto r = run_pipeline(f, all_baskets(), cfg);
    out.insert(out.end(), r.survivors.begin(), r.survivors.end());
  }
  return out;
}

const std::vector<FanoCandidate>& all_survivors() {
  static const auto s = [] {
    std::vector<int> fs;
    for (int f = 3; f <= 50; ++f) fs.push_back(f);
    return survivors_for(fs);
  }();
  return s;
}

}  // namespace

TEST_CASE("chi(0) = 1 and Serre duality") {
  auto sample = random_numerics(300, 7);
  for (const auto& c : all_survivors()) sample.push_back(c.numerics);
  for (const auto& num : sample) {
    CAPTURE(num.f);
    CAPTURE(to_cli_string(num.basket));
    CHECK(chi(num, 0) == Rational(1));
    for (long long n = -60; n <= 60; n += 7) CHECK(chi(num, n) + chi(num, -num.f - n) == Rational(0));
  }
}

TEST_CASE("contribution is periodic in n and symmetric in a") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick_r(2, 24), pick_f(1, 60), pick_n(-200, 200);
  for (int k = 0; k < 3000; ++k) {
    const int r = pick_r(rng), f = pick_f(rng);
    if (gcd_ll(r, f) != 1) continue;
    const int a = 1 + static_cast<int>(rng() % (r - 1));
    if (gcd_ll(r, a) != 1) continue;
    const long long n = pick_n(rng);
    const Rational c = contribution(f, r, a, n);
    CHECK(c == contribution(f, r, a, n + r));
    CHECK(c == contribution(f, r, a, n - 3LL * r));
    CHECK(c == contribution(f, r, r - a, n));
  }
}

TEST_CASE("closed form expands to the Riemann-Roch coefficients") {
  auto sample = random_numerics(120, 23);
  for (const auto& c : all_survivors()) sample.push_back(c.numerics);
  for (const auto& num : sample) {
    CAPTURE(num.f);
    CAPTURE(to_cli_string(num.basket));
    CHECK(series_expand(hilbert_series_closed(num), 50) == hilbert_coeffs(num, 50));
  }
}

TEST_CASE("survivor invariants") {
  REQUIRE_FALSE(all_survivors().empty());
  for (const auto& c : all_survivors()) {
    CAPTURE(c.f);
    CAPTURE(to_cli_string(c.basket));
    const Rational scaled = Rational(lcm_index(c.basket)) * c.numerics.a_cubed;
    CHECK(scaled.is_integer());
    CHECK(scaled.sign() > 0);
    CHECK(c.index_integral);
    CHECK(c.numerics.a_cubed.sign() > 0);
    for (long long n = -(c.f - 1); n <= -1; ++n) CHECK(chi(c.numerics, n) == Rational(0));
    CHECK(passes_inequality(c.numerics, InequalityVariant::paper));
  }
}

TEST_CASE("stage counts are monotone") {
  SearchConfig cfg;
  for (auto v : {InequalityVariant::paper, InequalityVariant::appendix}) {
    cfg.inequality_variant = v;
    for (int f = 3; f <= 50; ++f) {
      const auto c = run_pipeline(f, all_baskets(), cfg).counts;
      CAPTURE(f);
      CHECK(c.monotone());
      CHECK(c.c1 == all_baskets().size());
      CHECK(c.inequality_before_vanishing <= c.c3);
      CHECK(c.c5 <= c.inequality_before_vanishing);
    }
  }
}

TEST_CASE("pipeline output does not depend on the thread count") {
  const auto render = [](unsigned threads) {
    SearchConfig cfg;
    cfg.threads = threads;
    std::string out;
    for (int f : {3, 5, 13, 19, 20}) {
      const auto r = run_pipeline(f, all_baskets(), cfg);
      out += to_json(r.counts).dump() + '\n';
      for (const auto& s : r.survivors) out += to_json(s).dump() + '\n';
    }
    return out;
  };
  const std::string one = render(1);
  CHECK(one == render(8));
  CHECK(one == render(3));
}
