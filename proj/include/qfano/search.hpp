// Exhaustive search over baskets for numerically admissible Q-Fano 3-folds
// of a given Fano index f.  For each basket the filters are
//
//   (1) sigma(basket) < bound (membership in the enumeration)
//   (2) gcd(f, r_k) = 1 for all k
//   (3) A^3 > 0, with A^3 forced by chi(-A) = 0
//   (4) chi(nA) = 0 for n = -1, ..., -(f-1)
//   (5) Kawamata-type inequality between A^3 and A.c2
//
// Stage counts are reported as c1..c5 with c4 counting (1)-(4) and c5
// counting (1)-(5); `inequality_before_vanishing` counts (1)-(3)+(5), i.e.
// the count seen when (5) is applied before (4).
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qfano/basket.hpp"
#include "qfano/exactnum.hpp"
#include "qfano/rr.hpp"

namespace qfano {

enum class InequalityVariant {
  paper,     ///< (4f^2 - 3f) A^3 <= 4 f (12 A.c2/12)
  appendix,  ///< (4f^2 - 3) A^3 <= 48 f A.c2/12
};

struct SearchConfig {
  Rational bound{24};
  int f_min = 3;
  int f_max = 50;
  InequalityVariant inequality_variant = InequalityVariant::paper;
  unsigned threads = 0;  ///< 0 = hardware concurrency
  TypeConvention convention = TypeConvention::half_range;
};

struct StageCounts {
  std::uint64_t c1 = 0;
  std::uint64_t c2 = 0;
  std::uint64_t c3 = 0;
  std::uint64_t c4 = 0;
  std::uint64_t c5 = 0;
  std::uint64_t inequality_before_vanishing = 0;

  bool monotone() const { return c1 >= c2 && c2 >= c3 && c3 >= c4 && c4 >= c5; }
  friend bool operator==(const StageCounts&, const StageCounts&) = default;
};

struct FanoCandidate {
  int f = 0;
  Basket basket;
  FanoNumerics numerics;
  CycloRational hilbert;
  /// lcm(r_k) * A^3 is a positive integer.  A false here marks a candidate
  /// that is numerically admissible but cannot carry an integral divisor.
  bool index_integral = true;
};

struct PipelineResult {
  StageCounts counts;
  std::vector<FanoCandidate> survivors;  // canonical basket order
};

/// Stage (5) for already computed numerics.
bool passes_inequality(const FanoNumerics& num, InequalityVariant variant);

/// Stage (4): chi(nA) = 0 for n in [-(f-1), -1].
bool passes_vanishing(const FanoNumerics& num);

/// Runs the filters for one f over a precomputed basket list.
PipelineResult run_pipeline(int f, std::span<const Basket> baskets, const SearchConfig& cfg);

/// Enumerates baskets under cfg.bound / cfg.convention and runs the filters.
PipelineResult run_pipeline(int f, const SearchConfig& cfg);

struct ScanResult {
  std::map<int, PipelineResult> per_f;
  int max_f_with_survivors = 0;  ///< 0 when nothing survives anywhere
  std::vector<int> empty_f;
};

/// run_pipeline for every f in [cfg.f_min, cfg.f_max] (3 <= f_min <= f_max <= 50).
ScanResult scan(const SearchConfig& cfg);

/// lcm(rs) * (24 - sum (r - 1/r)).
Rational b_of(std::span<const int> rs);

struct BMaxResult {
  Rational max;
  std::vector<std::vector<int>> argmax;  // each sorted ascending
  std::uint64_t sequences_examined = 0;
};

/// Brute force over every multiset of integers >= 2 with sum (r - 1/r) < bound.
BMaxResult bmax(const Rational& bound = Rational(24));

struct K3Record {
  int f = 0;
  Basket basket;
  Rational a_cubed;
  Rational anticanonical_degree;  ///< f^3 A^3 = (-K_X)^3
};

struct K3MaxResult {
  Rational max;
  std::optional<K3Record> witness;
  std::map<int, std::optional<K3Record>> best_per_f;
  std::uint64_t records_examined = 0;
};

/// Maximum of f^3 A^3 over f in [cfg.f_min, cfg.f_max] (f_min >= 1).  For
/// f >= 3 the records are pipeline survivors.  For f = 1, 2 (where A^3 is not
/// forced) every basket passing (1),(2) -- and chi(-A) = 0 when f = 2 -- is
/// paired with the largest A^3 in (1/lcm) Z allowed by inequality (5), kept
/// when chi(A) >= 0.
K3MaxResult k3_max(const SearchConfig& cfg);

}  // namespace qfano
