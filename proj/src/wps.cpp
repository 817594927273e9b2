#include "qfano/wps.hpp"

#include <algorithm>
#include <numeric>

#include "qfano/rr.hpp"

namespace qfano {

WeightedModel::WeightedModel(std::vector<int> weights, int degree)
    : weights_(std::move(weights)), degree_(degree) {
  if (std::any_of(weights_.begin(), weights_.end(), [](int w) { return w < 1; })) {
    throw std::invalid_argument("weights must be positive");
  }
  if (degree_ < 0) throw std::invalid_argument("degree must be nonnegative");
  if (degree_ == 0 && weights_.size() != 4) {
    throw std::invalid_argument("an ambient weighted 3-space needs 4 weights");
  }
  if (degree_ > 0 && weights_.size() != 5) {
    throw std::invalid_argument("a hypersurface 3-fold needs 5 ambient weights");
  }
  std::sort(weights_.begin(), weights_.end());
}

std::string WeightedModel::str() const {
  std::string s = "P(";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(weights_[i]);
  }
  s += ")";
  if (degree_ > 0) return "(" + std::to_string(degree_) + ") in " + s;
  return s;
}

int fano_index(const WeightedModel& m) {
  const int f = std::accumulate(m.weights().begin(), m.weights().end(), 0) - m.degree();
  if (f <= 0) throw NotFanoError(m.str() + " is not Fano: sum of weights minus degree is " + std::to_string(f));
  return f;
}

Basket vertex_basket(const WeightedModel& m) {
  if (m.is_hypersurface()) {
    throw UnsupportedModelError("vertex analysis only applies to ambient weighted 3-spaces");
  }
  const auto& w = m.weights();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > 1 && w[j] > 1 && gcd_ll(w[i], w[j]) != 1) {
        throw UnsupportedModelError(m.str() + " has non-isolated singularities, unsupported");
      }
    }
  }
  std::vector<QuotientSingularity> pts;
  for (std::size_t v = 0; v < w.size(); ++v) {
    const int r = w[v];
    if (r == 1) continue;
    std::vector<long long> res;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j != v) res.push_back(w[j] % r);
    }
    // First pair (in index order) whose residues cancel mod r.
    std::optional<std::size_t> lone;
    for (std::size_t x = 0; x < 3 && !lone; ++x) {
      for (std::size_t y = x + 1; y < 3 && !lone; ++y) {
        if ((res[x] + res[y]) % r == 0) lone = 3 - x - y;
      }
    }
    if (!lone) throw NonTerminalError("vertex 1/" + std::to_string(r) + " of " + m.str() + " is not terminal");
    const auto eg = extended_gcd(res[*lone], r);
    if (eg.g != 1) throw NonTerminalError("vertex 1/" + std::to_string(r) + " of " + m.str() + " is not terminal");
    const long long scale = mod_floor(eg.x, r);
    const std::size_t paired = *lone == 0 ? 1 : 0;
    pts.push_back(canonicalize(r, res[paired] * scale));
  }
  return Basket(std::move(pts));
}

CycloRational product_hilbert(const WeightedModel& m) {
  Polynomial num = Polynomial::constant(1);
  if (m.degree() > 0) num = num.times_one_minus_t_pow(m.degree());
  return CycloRational(std::move(num), m.weights());
}

RowReport verify_row(int f, const Basket& basket, const WeightedModel& m) {
  RowReport rep;
  rep.index_ok = fano_index(m) == f;
  if (!m.is_hypersurface()) rep.basket_ok = vertex_basket(m) == basket.canonical();
  if (f >= 3) {
    const FanoNumerics num = make_numerics(f, basket);
    rep.series_ok = cyclo_eq(hilbert_series_closed(num), product_hilbert(m));
  }
  return rep;
}

}  // namespace qfano
