// Weighted projective 3-spaces P(w0..w3) and hypersurfaces (d) in
// P(w0..w4), used as independent cross-checks of the Riemann-Roch engine.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfano/basket.hpp"
#include "qfano/exactnum.hpp"

namespace qfano {

class NotFanoError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class UnsupportedModelError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class WeightedModel {
public:
  /// degree 0 means the ambient 3-space itself (4 weights); otherwise a
  /// hypersurface of that degree in a 4-dimensional weighted space (5 weights).
  WeightedModel(std::vector<int> weights, int degree = 0);

  const std::vector<int>& weights() const { return weights_; }
  int degree() const { return degree_; }
  bool is_hypersurface() const { return degree_ > 0; }

  /// "P(3,4,5,7)" or "(6) in P(1,2,3,4,5)"
  std::string str() const;

private:
  std::vector<int> weights_;
  int degree_ = 0;
};

/// sum(weights) - degree; throws NotFanoError when that is not positive.
int fano_index(const WeightedModel& m);

/// Terminal quotient points at the coordinate vertices of an ambient
/// P(w0..w3) with pairwise coprime weights > 1.
Basket vertex_basket(const WeightedModel& m);

/// (1 - t^d) / prod (1 - t^{w_i}), numerator 1 when d = 0.
CycloRational product_hilbert(const WeightedModel& m);

struct RowReport {
  bool index_ok = false;
  std::optional<bool> basket_ok;  ///< ambient models only
  std::optional<bool> series_ok;  ///< f >= 3 only
  bool passed() const { return index_ok && basket_ok.value_or(true) && series_ok.value_or(true); }
};

/// Checks a (f, basket, model) triple: index arithmetic, vertex basket for
/// ambient spaces, and equality of the Riemann-Roch Hilbert series with the
/// product form.  The series check is skipped for f < 3.
RowReport verify_row(int f, const Basket& basket, const WeightedModel& m);

}  // namespace qfano
