#include "qfano/search.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "qfano/parallel.hpp"

namespace qfano {

namespace {

// Returns (coefficient of A^3, right-hand side) so that stage (5) reads
// coefficient * A^3 <= rhs.
std::pair<Rational, Rational> inequality_sides(int f, const Rational& ac2, InequalityVariant variant) {
  const long long ff = f;
  switch (variant) {
    case InequalityVariant::paper:
      return {Rational(4 * ff * ff - 3 * ff), Rational(4 * ff) * (Rational(12) * ac2)};
    case InequalityVariant::appendix:
      return {Rational(4 * ff * ff - 3), Rational(48 * ff) * ac2};
  }
  return {};
}

bool coprime_to(int f, const Basket& b) {
  return std::all_of(b.begin(), b.end(), [f](const QuotientSingularity& p) { return gcd_ll(f, p.r) == 1; });
}

bool lcm_times_a3_positive_integer(const FanoNumerics& num) {
  const Rational scaled = Rational(lcm_index(num.basket)) * num.a_cubed;
  return scaled.is_integer() && scaled.sign() > 0;
}

struct BasketOutcome {
  std::uint8_t stage2 = 0;
  std::uint8_t stage3 = 0;
  std::uint8_t vanishing = 0;
  std::uint8_t inequality = 0;
  std::optional<FanoCandidate> survivor;
};

BasketOutcome evaluate(int f, const Basket& b, InequalityVariant variant) {
  BasketOutcome out;
  if (!coprime_to(f, b)) return out;
  out.stage2 = 1;
  FanoNumerics num = make_numerics(f, b);
  if (num.a_cubed.sign() <= 0) return out;
  out.stage3 = 1;
  out.inequality = passes_inequality(num, variant) ? 1 : 0;
  out.vanishing = passes_vanishing(num) ? 1 : 0;
  if (out.vanishing && out.inequality) {
    FanoCandidate c;
    c.f = f;
    c.basket = b;
    c.hilbert = hilbert_series_closed(num);
    c.index_integral = lcm_times_a3_positive_integer(num);
    c.numerics = std::move(num);
    out.survivor = std::move(c);
  }
  return out;
}

}  // namespace

bool passes_inequality(const FanoNumerics& num, InequalityVariant variant) {
  const auto [coeff, rhs] = inequality_sides(num.f, num.ac2_over_12, variant);
  return coeff * num.a_cubed <= rhs;
}

bool passes_vanishing(const FanoNumerics& num) {
  for (long long n = -1; n >= -(static_cast<long long>(num.f) - 1); --n) {
    if (!chi(num, n).is_zero()) return false;
  }
  return true;
}

PipelineResult run_pipeline(int f, std::span<const Basket> baskets, const SearchConfig& cfg) {
  if (f < 3) throw FanoDomainError("the search pipeline needs f >= 3, got f = " + std::to_string(f));
  const auto outcomes = parallel_map<BasketOutcome>(
      baskets.size(), cfg.threads,
      [&](std::size_t i) { return evaluate(f, baskets[i], cfg.inequality_variant); });

  PipelineResult result;
  result.counts.c1 = baskets.size();
  for (const auto& o : outcomes) {
    result.counts.c2 += o.stage2;
    result.counts.c3 += o.stage3;
    result.counts.c4 += o.vanishing;
    result.counts.c5 += (o.vanishing && o.inequality) ? 1 : 0;
    result.counts.inequality_before_vanishing += o.inequality;
    if (o.survivor) result.survivors.push_back(*o.survivor);
  }
  std::sort(result.survivors.begin(), result.survivors.end(),
            [](const FanoCandidate& x, const FanoCandidate& y) { return x.basket < y.basket; });
  return result;
}

PipelineResult run_pipeline(int f, const SearchConfig& cfg) {
  const auto baskets = enumerate_baskets(cfg.bound, cfg.convention);
  return run_pipeline(f, baskets, cfg);
}

ScanResult scan(const SearchConfig& cfg) {
  if (cfg.f_min < 3 || cfg.f_max > 50 || cfg.f_min > cfg.f_max) {
    throw FanoDomainError("scan needs 3 <= f_min <= f_max <= 50");
  }
  const auto baskets = enumerate_baskets(cfg.bound, cfg.convention);
  ScanResult out;
  for (int f = cfg.f_min; f <= cfg.f_max; ++f) {
    auto r = run_pipeline(f, baskets, cfg);
    if (r.survivors.empty()) {
      out.empty_f.push_back(f);
    } else {
      out.max_f_with_survivors = f;
    }
    out.per_f.emplace(f, std::move(r));
  }
  return out;
}

Rational b_of(std::span<const int> rs) {
  long long l = 1;
  Rational s;
  for (int r : rs) {
    if (r < 2) throw std::invalid_argument("b_of needs every r >= 2");
    l = lcm_ll(l, r);
    s += Rational(static_cast<long long>(r) * r - 1, r);
  }
  return Rational(l) * (Rational(24) - s);
}

BMaxResult bmax(const Rational& bound) {
  if (bound.sign() <= 0) throw std::invalid_argument("bmax bound must be positive");
  BMaxResult out;
  bool have_max = false;
  std::vector<int> current;
  std::function<void(int, const Rational&)> walk = [&](int min_r, const Rational& running) {
    ++out.sequences_examined;
    const Rational value = b_of(current);
    if (!have_max || value > out.max) {
      out.max = value;
      out.argmax.clear();
      have_max = true;
    }
    if (value == out.max) out.argmax.push_back(current);
    for (int r = min_r;; ++r) {
      Rational next = running + Rational(static_cast<long long>(r) * r - 1, r);
      if (next >= bound) break;
      current.push_back(r);
      walk(r, next);
      current.pop_back();
    }
  };
  walk(2, Rational());
  std::sort(out.argmax.begin(), out.argmax.end());
  return out;
}

K3MaxResult k3_max(const SearchConfig& cfg) {
  if (cfg.f_min < 1 || cfg.f_max > 50 || cfg.f_min > cfg.f_max) {
    throw FanoDomainError("k3_max needs 1 <= f_min <= f_max <= 50");
  }
  const auto baskets = enumerate_baskets(cfg.bound, cfg.convention);
  K3MaxResult out;
  const auto offer = [&](K3Record rec) {
    ++out.records_examined;
    auto& best = out.best_per_f[rec.f];
    if (!best || rec.anticanonical_degree > best->anticanonical_degree) best = rec;
    if (!out.witness || rec.anticanonical_degree > out.max) {
      out.max = rec.anticanonical_degree;
      out.witness = std::move(rec);
    }
  };

  for (int f = cfg.f_min; f <= cfg.f_max; ++f) {
    out.best_per_f[f] = std::nullopt;
    const Rational f3(static_cast<long long>(f) * f * f);
    if (f >= 3) {
      for (const auto& c : run_pipeline(f, baskets, cfg).survivors) {
        offer({f, c.basket, c.numerics.a_cubed, f3 * c.numerics.a_cubed});
      }
      continue;
    }
    auto records = parallel_map<std::optional<K3Record>>(
        baskets.size(), cfg.threads, [&](std::size_t i) -> std::optional<K3Record> {
          const Basket& b = baskets[i];
          if (!coprime_to(f, b)) return std::nullopt;
          FanoNumerics num = make_numerics(f, b, Rational(0));
          // The cubic term vanishes at n = -1 when f = 2, so A^3 is irrelevant here.
          if (f == 2 && !chi(num, -1).is_zero()) return std::nullopt;
          const auto [coeff, rhs] = inequality_sides(f, num.ac2_over_12, cfg.inequality_variant);
          if (rhs.sign() <= 0) return std::nullopt;
          const Rational cap = rhs / coeff;
          const long long lcm = lcm_index(b);
          const Integer k_max = (cap * Rational(lcm)).numerator() / (cap * Rational(lcm)).denominator();
          if (k_max < 1) return std::nullopt;
          // chi(A) is increasing in A^3, so if the largest admissible A^3 fails
          // chi(A) >= 0 every smaller one fails too.
          num.a_cubed = Rational(k_max, Integer(static_cast<long>(lcm)));
          if (chi(num, 1).sign() < 0) return std::nullopt;
          return K3Record{f, b, num.a_cubed, f3 * num.a_cubed};
        });
    for (auto& r : records) {
      if (r) offer(std::move(*r));
    }
  }
  return out;
}

}  // namespace qfano
