#include "qfano/rr.hpp"

#include <string>

namespace qfano {

namespace {

// b with a*b = 1 (mod r), in [1, r-1]; r = 1 gives 0.
long long inverse_mod(long long a, long long r) {
  if (r == 1) return 0;
  const auto eg = extended_gcd(mod_floor(a, r), r);
  if (eg.g != 1) {
    throw CoprimalityError(std::to_string(a) + " is not invertible modulo " + std::to_string(r));
  }
  return mod_floor(eg.x, r);
}

// (-i(r^2-1) + 6 * sum_{j=1}^{i-1} bar(bj)(r - bar(bj))) / (12 r), all in integers.
Rational contribution_from_index(long long r, long long b, long long i) {
  long long extra = 0;
  for (long long j = 1; j < i; ++j) {
    const long long x = (b * j) % r;
    extra += x * (r - x);
  }
  return Rational(-i * (r * r - 1) + 6 * extra, 12 * r);
}

}  // namespace

int local_index(int f, int r, long long n) {
  if (r < 1) throw std::invalid_argument("local_index needs r >= 1");
  if (r == 1) return 0;
  if (gcd_ll(f, r) != 1) {
    throw CoprimalityError("Fano index " + std::to_string(f) + " is not coprime to r = " +
                           std::to_string(r));
  }
  const long long f_inv = inverse_mod(f, r);
  return static_cast<int>(mod_floor(-mod_floor(n, r) * f_inv, r));
}

Rational contribution(int f, int r, int a, long long n) {
  const long long i = local_index(f, r, n);
  if (i == 0) return {};
  const long long b = inverse_mod(a, r);
  return contribution_from_index(r, b, i);
}

Rational contribution_xgcd_route(int f, int r, int a, long long n) {
  // i_is(f, r, n): (h, u, v) = XGCD(f, r); (-n*u) mod r
  if (gcd_ll(f, r) != 1) {
    throw CoprimalityError("Fano index " + std::to_string(f) + " is not coprime to r = " +
                           std::to_string(r));
  }
  const auto i_is = [r](long long x, long long m) {
    const auto eg = extended_gcd(x, r);
    return mod_floor(mod_floor(-m, r) * mod_floor(eg.x, r), r);
  };
  const long long i = i_is(f, n);
  const long long b = i_is(a, 1);
  Rational result(-i * (static_cast<long long>(r) * r - 1), 12LL * r);
  if (i >= 2) {
    for (long long j = 0; j <= i - 1; ++j) {
      const long long x = mod_floor(b * j, r);
      result += Rational(x * (r - x), 2LL * r);
    }
  }
  return result;
}

Rational ac2_over_12(int f, const Basket& basket) {
  if (f < 1) throw FanoDomainError("Fano index must be positive");
  Rational s;
  for (const auto& p : basket) s += Rational(static_cast<long long>(p.r) * p.r - 1, 12LL * p.r);
  return (Rational(2) - s) / Rational(f);
}

void require_coprime(int f, const Basket& basket) {
  for (const auto& p : basket) {
    if (gcd_ll(f, p.r) != 1) {
      throw CoprimalityError("gcd(f, r_k) != 1: f = " + std::to_string(f) +
                             ", r_k = " + std::to_string(p.r));
    }
  }
}

Rational a_cubed(int f, const Basket& basket) {
  if (f < 3) throw FanoDomainError("A^3 from chi(-A) = 0 needs f >= 3, got f = " + std::to_string(f));
  require_coprime(f, basket);
  Rational periodic;
  for (const auto& p : basket) periodic += contribution(f, p.r, p.a, -1);
  const Rational factor(12, static_cast<long long>(f - 1) * (f - 2));
  return factor * (Rational(1) - ac2_over_12(f, basket) + periodic);
}

FanoNumerics make_numerics(int f, const Basket& basket) {
  return {f, basket, a_cubed(f, basket), ac2_over_12(f, basket)};
}

FanoNumerics make_numerics(int f, const Basket& basket, const Rational& a3) {
  require_coprime(f, basket);
  return {f, basket, a3, ac2_over_12(f, basket)};
}

Rational chi(const FanoNumerics& num, long long n) {
  const long long f = num.f;
  Rational v(1);
  v += Rational(n * (n + f) * (2 * n + f), 12) * num.a_cubed;
  v += Rational(n) * num.ac2_over_12;
  for (const auto& p : num.basket) v += contribution(num.f, p.r, p.a, n);
  return v;
}

std::vector<Rational> hilbert_coeffs(const FanoNumerics& num, std::size_t n_max) {
  std::vector<Rational> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(chi(num, static_cast<long long>(n)));
  return out;
}

CycloRational hilbert_series_closed(const FanoNumerics& num) {
  const long long f = num.f;
  CycloRational series(Polynomial{Rational(1)}, {1});

  const Rational c = num.a_cubed / Rational(12);
  Polynomial cubic{Rational(0), Rational(f * f + 3 * f + 2), Rational(8 - 2 * f * f),
                   Rational(f * f - 3 * f + 2)};
  series = series + CycloRational(cubic.scaled(c), {1, 1, 1, 1});

  series = series + CycloRational(Polynomial::monomial(num.ac2_over_12, 1), {1, 1});

  for (const auto& p : num.basket) {
    std::vector<Rational> periodic(static_cast<std::size_t>(p.r));
    for (int l = 1; l < p.r; ++l) periodic[static_cast<std::size_t>(l)] = contribution(num.f, p.r, p.a, l);
    series = series + CycloRational(Polynomial(std::move(periodic)), {p.r});
  }
  return series;
}

}  // namespace qfano
