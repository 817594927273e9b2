// Singular Riemann-Roch for a Q-Fano 3-fold X with -K_X = f*A and a basket
// of terminal quotient points.  Everything is exact.
//
//   chi(nA) = 1 + n(n+f)(2n+f)/12 * A^3 + n * (A.c2/12) + sum_k c_k(n)
//   c_k(n)  = -i(r^2-1)/(12r) + sum_{j=1}^{i-1} bar(bj)(r - bar(bj))/(2r)
//
// with i = i_{k,n} the local index of nA at [r, a] and b = a^{-1} mod r.
#pragma once

#include <stdexcept>
#include <vector>

#include "qfano/basket.hpp"
#include "qfano/exactnum.hpp"

namespace qfano {

class CoprimalityError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class FanoDomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

struct FanoNumerics {
  int f = 1;
  Basket basket;
  Rational a_cubed;      // A^3
  Rational ac2_over_12;  // A.c2(X)/12
};

/// The i in [0, r-1] with i = -n * f^{-1} (mod r).  r = 1 gives 0.
int local_index(int f, int r, long long n);

/// Per-point correction term c(n) for the point [r, a].
Rational contribution(int f, int r, int a, long long n);

/// Same quantity by a second route: b is taken
/// as the XGCD-based inverse (which equals -a^{-1} mod r) and the extra sum
/// runs over j in [0, i-1].  Kept as an independent route for tests.
Rational contribution_xgcd_route(int f, int r, int a, long long n);

/// (2 - sum_k (r_k^2-1)/(12 r_k)) / f, forced by chi(O_X) = 1.
Rational ac2_over_12(int f, const Basket& basket);

/// A^3 from chi(-A) = 0; needs f >= 3.  May be <= 0.
Rational a_cubed(int f, const Basket& basket);

/// Checks gcd(f, r_k) = 1 for every point; throws CoprimalityError naming
/// the first offending r_k.
void require_coprime(int f, const Basket& basket);

/// Builds the numerics for (f, basket) with A^3 from a_cubed(); f >= 3.
FanoNumerics make_numerics(int f, const Basket& basket);

/// Numerics with an externally supplied A^3 (used for f = 1, 2).
FanoNumerics make_numerics(int f, const Basket& basket, const Rational& a3);

/// chi(O_X(nA)); defined for every integer n.
Rational chi(const FanoNumerics& num, long long n);

/// [chi(0), ..., chi(n_max)].
std::vector<Rational> hilbert_coeffs(const FanoNumerics& num, std::size_t n_max);

/// The Hilbert series as the four-summand rational function
///   1/(1-t) + A^3 ((f^2+3f+2)t + (8-2f^2)t^2 + (f^2-3f+2)t^3) / (12(1-t)^4)
///   + (A.c2/12) t/(1-t)^2 + sum_k (sum_{l=1}^{r_k-1} c_k(l) t^l) / (1-t^{r_k}).
CycloRational hilbert_series_closed(const FanoNumerics& num);

}  // namespace qfano
