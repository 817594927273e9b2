// Exact rational numbers, dense univariate polynomials over Q, and rational
// functions whose denominators are products of cyclotomic-style factors
// (1 - t^e).  Nothing in here ever touches floating point.
#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qfano {

using Integer = mpz_class;

class ArithmeticError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Arbitrary precision fraction, always kept in lowest terms with a positive
/// denominator.
class Rational {
public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  Rational(long long value);  // NOLINT
  explicit Rational(const Integer& value) : q_(value) {}
  Rational(const Integer& num, const Integer& den);
  Rational(long long num, long long den);

  /// Accepts "p/q", "-p/q" or a plain integer.
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// "p/q", or "n" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class q_;
};

/// Dense polynomial in t with rational coefficients, index = degree.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t degree) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;

  /// this * (1 - t^e)
  Polynomial times_one_minus_t_pow(int e) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// num(t) / prod_i (1 - t^{e_i}).  The exponent multiset is kept sorted.
class CycloRational {
public:
  CycloRational() = default;
  CycloRational(Polynomial numerator, std::vector<int> denominator_exponents);

  const Polynomial& numerator() const { return num_; }
  const std::vector<int>& denominator_exponents() const { return den_; }

  /// prod_i (1 - t^{e_i}) multiplied out.
  Polynomial expanded_denominator() const;

  std::string str() const;

private:
  Polynomial num_;
  std::vector<int> den_;
};

/// Coefficients of t^0..t^{n_max} of the power series of f.
std::vector<Rational> series_expand(const CycloRational& f, std::size_t n_max);

CycloRational cyclo_add(const CycloRational& a, const CycloRational& b);

/// Exact equality as rational functions (cross-multiplied numerators agree).
bool cyclo_eq(const CycloRational& a, const CycloRational& b);

inline CycloRational operator+(const CycloRational& a, const CycloRational& b) {
  return cyclo_add(a, b);
}

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

/// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct ExtendedGcd {
  long long g;
  long long x;
  long long y;
};
ExtendedGcd extended_gcd(long long a, long long b);

/// Nonnegative residue of v modulo m (m > 0).
inline long long mod_floor(long long v, long long m) {
  const long long r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace qfano
