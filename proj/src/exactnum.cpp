#include "qfano/exactnum.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

namespace qfano {

static_assert(sizeof(long) == sizeof(long long), "64-bit long expected");

Rational::Rational(long long value) : q_(static_cast<long>(value)) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(long long num, long long den)
    : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}

Rational Rational::parse(std::string_view text) {
  const auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  const auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::string buf(s);
    if (buf.empty() || buf == "-" || buf == "+") {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    if (buf.front() == '+') buf.erase(0, 1);
    for (std::size_t i = (buf.front() == '-' ? 1 : 0); i < buf.size(); ++i) {
      if (buf[i] < '0' || buf[i] > '9') {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
      }
    }
    return Integer(buf);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Rational Polynomial::coeff(std::size_t degree) const {
  return degree < coeffs_.size() ? coeffs_[degree] : Rational();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  std::vector<Rational> out(coeffs_);
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::times_one_minus_t_pow(int e) const {
  if (e < 1) throw std::invalid_argument("factor (1 - t^e) needs e >= 1");
  if (is_zero()) return {};
  const auto shift = static_cast<std::size_t>(e);
  std::vector<Rational> out(coeffs_.size() + shift);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] += coeffs_[i];
    out[i + shift] -= coeffs_[i];
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
    } else {
      if (mag != Rational(1)) os << mag << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

CycloRational::CycloRational(Polynomial numerator, std::vector<int> denominator_exponents)
    : num_(std::move(numerator)), den_(std::move(denominator_exponents)) {
  for (int e : den_) {
    if (e < 1) throw std::invalid_argument("denominator factor (1 - t^e) needs e >= 1");
  }
  std::sort(den_.begin(), den_.end());
}

Polynomial CycloRational::expanded_denominator() const {
  Polynomial d = Polynomial::constant(1);
  for (int e : den_) d = d.times_one_minus_t_pow(e);
  return d;
}

std::string CycloRational::str() const {
  std::ostringstream os;
  os << "(" << num_.str() << ")";
  if (den_.empty()) return os.str();
  os << " / (";
  std::map<int, int> mult;
  for (int e : den_) ++mult[e];
  bool first = true;
  for (const auto& [e, m] : mult) {
    if (!first) os << "*";
    first = false;
    os << "(1-t";
    if (e > 1) os << "^" << e;
    os << ")";
    if (m > 1) os << "^" << m;
  }
  os << ")";
  return os.str();
}

std::vector<Rational> series_expand(const CycloRational& f, std::size_t n_max) {
  std::vector<Rational> c(n_max + 1);
  const auto& num = f.numerator().coefficients();
  for (std::size_t i = 0; i < num.size() && i <= n_max; ++i) c[i] = num[i];
  // Dividing by (1 - t^e) is the running sum c[n] += c[n - e].
  for (int e : f.denominator_exponents()) {
    const auto shift = static_cast<std::size_t>(e);
    for (std::size_t n = shift; n <= n_max; ++n) c[n] += c[n - shift];
  }
  return c;
}

namespace {

// Exponents present in `want` but missing from `have`, with multiplicity.
std::vector<int> missing_factors(const std::vector<int>& have, const std::vector<int>& want) {
  std::vector<int> out;
  std::set_difference(want.begin(), want.end(), have.begin(), have.end(), std::back_inserter(out));
  return out;
}

}  // namespace

CycloRational cyclo_add(const CycloRational& a, const CycloRational& b) {
  // Common denominator: multiset union of the factor lists.
  std::vector<int> common;
  std::set_union(a.denominator_exponents().begin(), a.denominator_exponents().end(),
                 b.denominator_exponents().begin(), b.denominator_exponents().end(),
                 std::back_inserter(common));
  Polynomial na = a.numerator();
  for (int e : missing_factors(a.denominator_exponents(), common)) na = na.times_one_minus_t_pow(e);
  Polynomial nb = b.numerator();
  for (int e : missing_factors(b.denominator_exponents(), common)) nb = nb.times_one_minus_t_pow(e);
  return CycloRational(na + nb, std::move(common));
}

bool cyclo_eq(const CycloRational& a, const CycloRational& b) {
  Polynomial lhs = a.numerator();
  for (int e : b.denominator_exponents()) lhs = lhs.times_one_minus_t_pow(e);
  Polynomial rhs = b.numerator();
  for (int e : a.denominator_exponents()) rhs = rhs.times_one_minus_t_pow(e);
  return lhs == rhs;
}

// ---------------------------------------------------------------------------

long long gcd_ll(long long a, long long b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    const long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return std::llabs(a / gcd_ll(a, b) * b);
}

ExtendedGcd extended_gcd(long long a, long long b) {
  long long old_r = a, r = b;
  long long old_s = 1, s = 0;
  long long old_t = 0, t = 1;
  while (r != 0) {
    const long long q = old_r / r;
    long long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

}  // namespace qfano
