// Acceptance checks.  Usage: acceptance <1..8|all>
// Prints one PASS/FAIL line per criterion; exit status 0 iff all requested
// criteria pass.  Every comparison is exact; the only tolerances are the
// wall-clock limits below.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "qfano/golden.hpp"
#include "qfano/io.hpp"
#include "qfano/rr.hpp"
#include "qfano/search.hpp"
#include "qfano/wps.hpp"

using namespace qfano;

namespace {

constexpr double kBasketSeconds = 5.0;
constexpr double kStageTableSeconds = 60.0;
constexpr double kScanSingleSeconds = 600.0;
constexpr double kScanParallelSeconds = 120.0;
constexpr double kBmaxSeconds = 5.0;
constexpr double kKboundSeconds = 300.0;
constexpr double kWeightedSeconds = 5.0;
constexpr unsigned kParallelThreads = 8;

// Pinned inequality variant for the stage-count comparison.
constexpr InequalityVariant kStageTableVariant = InequalityVariant::paper;

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

template <typename Fn>
double seconds(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

long long count_solutions(const std::vector<int>& w, std::size_t i, long long n) {
  if (i == w.size()) return n == 0 ? 1 : 0;
  long long total = 0;
  for (long long x = 0; x * w[i] <= n; ++x) total += count_solutions(w, i + 1, n - x * w[i]);
  return total;
}

Verdict criterion1() {
  Verdict v;
  std::size_t n = 0;
  const double t = seconds([&] { n = enumerate_baskets(Rational(24), TypeConvention::half_range).size(); });
  std::size_t n_full = 0;
  seconds([&] { n_full = enumerate_baskets(Rational(24), TypeConvention::full_range).size(); });
  v.require(n == 25161 || n_full == 25161,
            "half-range count " + std::to_string(n) + ", full-range count " + std::to_string(n_full) +
                ", reference 25161");
  v.require(t < kBasketSeconds, "enumeration took " + fmt_seconds(t));
  v.detail += (v.detail.empty() ? "" : "; ") + std::string("shipped convention: half (") + std::to_string(n) +
              " baskets in " + fmt_seconds(t) + ")";
  return v;
}

Verdict criterion2() {
  Verdict v;
  SearchConfig cfg;
  cfg.inequality_variant = kStageTableVariant;
  cfg.threads = 1;
  std::ostringstream rows;
  const double t = seconds([&] {
    const auto baskets = enumerate_baskets(cfg.bound, cfg.convention);
    for (const auto& row : golden::table1) {
      const auto c = run_pipeline(row.f, baskets, cfg).counts;
      const std::array<std::uint64_t, 5> got = {c.c1, c.c2, c.c3, c.c4, c.c5};
      if (got != row.counts) {
        std::ostringstream m;
        m << "f=" << row.f << " got (" << got[0] << ',' << got[1] << ',' << got[2] << ',' << got[3] << ','
          << got[4] << ") reference (" << row.counts[0] << ',' << row.counts[1] << ',' << row.counts[2] << ','
          << row.counts[3] << ',' << row.counts[4] << ')';
        v.require(false, m.str());
      }
    }
  });
  v.require(t < kStageTableSeconds, "six rows took " + fmt_seconds(t));
  v.detail += (v.detail.empty() ? "" : "; ") + std::string("ineq=") + to_string(kStageTableVariant) + ", " +
              fmt_seconds(t);
  return v;
}

Verdict criterion3() {
  Verdict v;
  const auto run = [&](unsigned threads, double limit) {
    SearchConfig cfg;
    cfg.threads = threads;
    ScanResult res;
    const double t = seconds([&] { res = scan(cfg); });
    for (const auto& [f, r] : res.per_f) {
      const bool must_be_empty = f >= 20 || f == 12 || f == 14 || f == 15 || f == 16 || f == 18;
      if (must_be_empty) v.require(r.survivors.empty(), "f=" + std::to_string(f) + " has survivors");
    }
    v.require(res.max_f_with_survivors == 19,
              "largest f with survivors is " + std::to_string(res.max_f_with_survivors));
    v.require(t < limit, std::to_string(threads) + "-thread scan took " + fmt_seconds(t));
    return t;
  };
  const double t1 = run(1, kScanSingleSeconds);
  const double t8 = run(kParallelThreads, kScanParallelSeconds);
  v.detail += (v.detail.empty() ? "" : "; ") + std::string("scan f=3..50: ") + fmt_seconds(t1) +
              " single-threaded, " + fmt_seconds(t8) + " with " + std::to_string(kParallelThreads) + " threads";
  return v;
}

Verdict criterion4() {
  Verdict v;
  SearchConfig cfg;
  const auto res = run_pipeline(19, cfg);
  v.require(res.survivors.size() == 1, std::to_string(res.survivors.size()) + " survivors at f=19");
  if (res.survivors.size() != 1) return v;
  const auto& s = res.survivors.front();
  v.require(s.basket == parse_basket(golden::f19_basket), "basket " + to_display_string(s.basket));
  v.require(s.numerics.a_cubed == Rational::parse(golden::f19_a_cubed), "A^3 = " + s.numerics.a_cubed.str());
  const std::vector<int> w(golden::f19_weights.begin(), golden::f19_weights.end());
  v.require(cyclo_eq(s.hilbert, CycloRational(Polynomial::constant(1), w)), "closed form differs from the product");
  const auto coeffs = hilbert_coeffs(s.numerics, 20);
  for (int n = 0; n <= 20; ++n) {
    v.require(coeffs[n] == Rational(count_solutions(w, 0, n)), "P_" + std::to_string(n) + " differs");
  }
  if (v.pass) v.detail = "basket {[3,1],[4,1],[5,2],[7,2]}, A^3 = 1/420, P_0..P_20 match";
  return v;
}

Verdict criterion5() {
  Verdict v;
  BMaxResult res;
  const double t = seconds([&] { res = bmax(Rational(24)); });
  const std::vector<int> arg(golden::bmax_argmax.begin(), golden::bmax_argmax.end());
  v.require(res.max == Rational(golden::bmax_value), "max = " + res.max.str());
  v.require(res.argmax == std::vector<std::vector<int>>{arg}, "argmax is not exactly {3,4,5,7}");
  v.require(b_of(arg) == Rational(golden::bmax_value), "B({3,4,5,7}) = " + b_of(arg).str());
  for (const auto& seq : golden::bmax_runners_up()) {
    v.require(b_of(seq) < Rational(golden::bmax_value), "runner-up not below 2489");
  }
  v.require(t < kBmaxSeconds, "bmax took " + fmt_seconds(t));
  v.detail += (v.detail.empty() ? "" : "; ") + std::string("2489 at {3,4,5,7}, ") +
              std::to_string(res.sequences_examined) + " sequences, " + fmt_seconds(t);
  return v;
}

Verdict criterion6() {
  Verdict v;
  SearchConfig cfg;
  cfg.f_min = 1;
  cfg.f_max = 50;
  K3MaxResult res;
  const double t = seconds([&] { res = k3_max(cfg); });
  const Rational bound = Rational::parse(golden::k3_bound);
  v.require(res.witness.has_value(), "no feasible record");
  if (res.witness) {
    v.require(res.max == bound, "max f^3 A^3 = " + res.max.str() + " at f=" + std::to_string(res.witness->f) +
                                    ", basket " + to_display_string(res.witness->basket) + ", expected " +
                                    bound.str());
  }
  for (const auto& [f, rec] : res.best_per_f) {
    if (rec && rec->anticanonical_degree > bound) {
      v.require(false, "f=" + std::to_string(f) + " record " + rec->anticanonical_degree.str() + " exceeds " +
                           bound.str());
    }
  }
  v.require(t < kKboundSeconds, "kbound took " + fmt_seconds(t));
  v.detail += (v.detail.empty() ? "" : "; ") + fmt_seconds(t);
  return v;
}

Verdict criterion7() {
  Verdict v;
  std::size_t rows = 0;
  const double t = seconds([&] {
    for (const auto& row : golden::table2()) {
      ++rows;
      const WeightedModel m(row.weights, row.degree);
      try {
        const auto rep = verify_row(row.f, parse_basket(row.basket), m);
        v.require(rep.index_ok, "f=" + std::to_string(row.f) + " index");
        v.require(rep.basket_ok.value_or(true), "f=" + std::to_string(row.f) + " vertex basket");
        v.require(rep.series_ok.value_or(true), "f=" + std::to_string(row.f) + " Hilbert series");
        v.require(rep.basket_ok.has_value() == (row.degree == 0), "f=" + std::to_string(row.f) + " vertex check skipped");
        v.require(rep.series_ok.has_value() == (row.f >= 3), "f=" + std::to_string(row.f) + " series check skipped");
      } catch (const std::exception& e) {
        v.require(false, "f=" + std::to_string(row.f) + ": " + e.what());
      }
    }
  });
  v.require(rows == 13, std::to_string(rows) + " rows");
  v.require(t < kWeightedSeconds, "table2 took " + fmt_seconds(t));
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(rows) + " rows, " + fmt_seconds(t);
  return v;
}

Verdict criterion8() {
  Verdict v;
  const auto baskets = enumerate_baskets();
  SearchConfig cfg;
  std::vector<FanoNumerics> sample;
  std::vector<FanoCandidate> survivors;
  for (int f = 3; f <= 50; ++f) {
    const auto r = run_pipeline(f, baskets, cfg);
    v.require(r.counts.monotone(), "counts not monotone at f=" + std::to_string(f));
    for (const auto& s : r.survivors) {
      survivors.push_back(s);
      sample.push_back(s.numerics);
    }
  }
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, baskets.size() - 1);
  std::uniform_int_distribution<int> pick_f(3, 50);
  while (sample.size() < survivors.size() + 200) {
    const Basket& b = baskets[pick(rng)];
    const int f = pick_f(rng);
    bool ok = true;
    for (const auto& p : b) ok = ok && gcd_ll(f, p.r) == 1;
    if (ok) sample.push_back(make_numerics(f, b));
  }
  for (const auto& num : sample) {
    const std::string id = "f=" + std::to_string(num.f) + " " + to_display_string(num.basket);
    v.require(chi(num, 0) == Rational(1), "chi(0) != 1 for " + id);
    for (long long n = -55; n <= 55; ++n) {
      if (chi(num, n) + chi(num, -num.f - n) != Rational(0)) {
        v.require(false, "Serre duality fails for " + id);
        break;
      }
    }
    v.require(series_expand(hilbert_series_closed(num), 50) == hilbert_coeffs(num, 50),
              "closed form expansion differs for " + id);
    for (const auto& p : num.basket) {
      for (long long n = -30; n <= 30; ++n) {
        const Rational c = contribution(num.f, p.r, p.a, n);
        if (c != contribution(num.f, p.r, p.a, n + p.r) || c != contribution(num.f, p.r, p.r - p.a, n)) {
          v.require(false, "contribution symmetry fails for " + id);
          break;
        }
      }
    }
  }
  for (const auto& s : survivors) {
    const Rational scaled = Rational(lcm_index(s.basket)) * s.numerics.a_cubed;
    v.require(scaled.is_integer() && scaled.sign() > 0,
              "lcm*A^3 = " + scaled.str() + " for f=" + std::to_string(s.f) + " " + to_display_string(s.basket));
  }
  const auto render = [&](unsigned threads) {
    SearchConfig c;
    c.threads = threads;
    std::string out;
    for (int f = 3; f <= 50; ++f) {
      const auto r = run_pipeline(f, baskets, c);
      out += to_json(r.counts).dump() + '\n';
      for (const auto& s : r.survivors) out += to_json(s).dump() + '\n';
    }
    return out;
  };
  v.require(render(1) == render(kParallelThreads), "output differs between 1 and 8 threads");
  if (v.pass) {
    v.detail = std::to_string(sample.size()) + " numerics (" + std::to_string(survivors.size()) +
               " survivors), thread-count independence at 1 vs 8";
  }
  return v;
}

const std::map<int, std::pair<std::string, std::function<Verdict()>>>& criteria() {
  static const std::map<int, std::pair<std::string, std::function<Verdict()>>> table = {
      {1, {"basket enumeration count", criterion1}},
      {2, {"stage-count table rows", criterion2}},
      {3, {"no survivors for f >= 20 or f in {12,14,15,16,18}", criterion3}},
      {4, {"f = 19 uniqueness data", criterion4}},
      {5, {"B maximization", criterion5}},
      {6, {"-K^3 bound over f = 1..50", criterion6}},
      {7, {"weighted projective examples", criterion7}},
      {8, {"property suites", criterion8}},
  };
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  const std::string arg = argc > 1 ? argv[1] : "all";
  if (arg == "all") {
    for (const auto& [id, _] : criteria()) which.push_back(id);
  } else {
    try {
      which.push_back(std::stoi(arg));
    } catch (const std::exception&) {
      std::cerr << "usage: acceptance <1..8|all>\n";
      return 2;
    }
    if (!criteria().count(which.front())) {
      std::cerr << "usage: acceptance <1..8|all>\n";
      return 2;
    }
  }
  bool all = true;
  for (int id : which) {
    const auto& [name, fn] = criteria().at(id);
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << name << " -- " << v.detail
              << std::endl;
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
