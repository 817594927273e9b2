// Baskets of 3-dimensional terminal cyclic quotient singularities
// 1/r(1, a, -a) and their exhaustive enumeration under the bound
// sum (r_k - 1/r_k) < bound.
#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qfano/exactnum.hpp"

namespace qfano {

class NonTerminalError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// One basket point [r, a], i.e. the singularity type 1/r(1, a, -a).
struct QuotientSingularity {
  int r = 2;
  int a = 1;

  /// a <= r/2; types [r, a] and [r, r - a] are isomorphic.
  bool is_canonical() const { return 2 * a <= r; }

  friend auto operator<=>(const QuotientSingularity&, const QuotientSingularity&) = default;
};

/// Reduces a_raw mod r and reflects it into [1, floor(r/2)].
/// Throws NonTerminalError when gcd(r, a) != 1 and std::invalid_argument when r < 2.
QuotientSingularity canonicalize(int r, long long a_raw);

/// Which representative of each point type the enumerator emits.
enum class TypeConvention {
  half_range,  ///< 1 <= a <= floor(r/2), the canonical form (default)
  full_range,  ///< 1 <= a <= r - 1, i.e. [r,a] and [r,r-a] counted separately
};

/// Multiset of basket points, stored sorted by (r, a).
class Basket {
public:
  Basket() = default;
  /// Validates every point (r >= 2, 1 <= a < r, gcd(r, a) = 1) and sorts.
  explicit Basket(std::vector<QuotientSingularity> points);

  const std::vector<QuotientSingularity>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// The same basket with every point mapped to its canonical form.
  Basket canonical() const;

  /// The multiset {r_k}.
  std::vector<int> indices() const;

  friend auto operator<=>(const Basket&, const Basket&) = default;

private:
  std::vector<QuotientSingularity> points_;
};

/// sum_k (r_k - 1/r_k); 0 for the empty basket.
Rational sigma(const Basket& basket);

/// lcm of all r_k; 1 for the empty basket.
long long lcm_index(const Basket& basket);

/// Every basket with sigma < bound, each once, in lexicographic order of the
/// sorted point sequence (depth-first over nondecreasing points).
std::vector<Basket> enumerate_baskets(const Rational& bound = Rational(24),
                                      TypeConvention convention = TypeConvention::half_range);

/// "r,a;r,a;..." with the empty string meaning the empty basket.
std::string to_cli_string(const Basket& basket);

/// Parses the CLI grammar above.  Points are canonicalized.
Basket parse_basket(std::string_view text);

/// "{[3,1],[4,1],[5,2],[7,2]}"
std::string to_display_string(const Basket& basket);

}  // namespace qfano
