// qfano: command-line front end for basket enumeration, Riemann-Roch Hilbert
// series and the Fano-index search.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qfano/basket.hpp"
#include "qfano/golden.hpp"
#include "qfano/io.hpp"
#include "qfano/rr.hpp"
#include "qfano/search.hpp"
#include "qfano/wps.hpp"

namespace {

using namespace qfano;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string bound = "24";
  std::string ineq = "paper";
  std::string convention = "half";
  unsigned threads = 0;
  bool json = false;
  std::string basket_cache;
};

InequalityVariant parse_ineq(const std::string& s) {
  if (s == "paper") return InequalityVariant::paper;
  if (s == "appendix") return InequalityVariant::appendix;
  throw UsageError("--ineq must be paper or appendix");
}

TypeConvention parse_convention(const std::string& s) {
  if (s == "half") return TypeConvention::half_range;
  if (s == "full") return TypeConvention::full_range;
  throw UsageError("--convention must be half or full");
}

Rational parse_bound(const std::string& s) {
  Rational b;
  try {
    b = Rational::parse(s);
  } catch (const std::exception&) {
    throw UsageError("--bound must be a rational number, got '" + s + "'");
  }
  if (b.sign() <= 0) throw UsageError("--bound must be positive");
  return b;
}

SearchConfig make_config(const Common& c) {
  SearchConfig cfg;
  cfg.bound = parse_bound(c.bound);
  cfg.inequality_variant = parse_ineq(c.ineq);
  cfg.convention = parse_convention(c.convention);
  cfg.threads = c.threads;
  return cfg;
}

Json config_json(const SearchConfig& cfg) {
  Json j;
  j["bound"] = to_json(cfg.bound);
  j["convention"] = to_string(cfg.convention);
  j["inequality_variant"] = to_string(cfg.inequality_variant);
  return j;
}

// Loads the cache when the file exists, otherwise enumerates and writes it.
std::vector<Basket> load_baskets(const Common& c, const SearchConfig& cfg) {
  if (c.basket_cache.empty()) return enumerate_baskets(cfg.bound, cfg.convention);
  std::ifstream in(c.basket_cache);
  if (in) {
    auto baskets = read_baskets_jsonl(in);
    for (const auto& b : baskets) {
      if (sigma(b) >= cfg.bound) {
        throw UsageError("basket cache " + c.basket_cache + " holds " + to_display_string(b) +
                         " with sigma >= bound; it was built for a different bound");
      }
    }
    return baskets;
  }
  auto baskets = enumerate_baskets(cfg.bound, cfg.convention);
  std::ofstream out(c.basket_cache);
  if (!out) throw UsageError("cannot write basket cache " + c.basket_cache);
  write_baskets_jsonl(out, baskets);
  return baskets;
}

void add_common(CLI::App* sub, Common& c, bool search_flags) {
  sub->add_option("--bound", c.bound, "sigma bound for baskets (rational)")->capture_default_str();
  sub->add_option("--convention", c.convention, "type range: half (a <= r/2) or full (a < r)")
      ->capture_default_str();
  sub->add_flag("--json", c.json, "machine-readable output");
  if (search_flags) {
    sub->add_option("--ineq", c.ineq, "stability inequality variant: paper or appendix")->capture_default_str();
    sub->add_option("--threads", c.threads, "worker threads, 0 = all cores")->capture_default_str();
    sub->add_option("--basket-cache", c.basket_cache, "JSON Lines basket cache (read if present, else written)");
  }
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string join_counts(const StageCounts& c) {
  std::ostringstream s;
  s << c.c1 << ' ' << c.c2 << ' ' << c.c3 << ' ' << c.c4 << ' ' << c.c5;
  return s.str();
}

std::vector<int> parse_int_list(const std::string& s, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError(flag + " expects comma-separated integers, got '" + s + "'");
    }
  }
  if (out.empty()) throw UsageError(flag + " is empty");
  return out;
}

// ---- baskets --------------------------------------------------------------

int cmd_baskets(const Common& c, bool count, const std::string& emit) {
  const Rational bound = parse_bound(c.bound);
  const auto baskets = enumerate_baskets(bound, parse_convention(c.convention));
  if (!emit.empty()) {
    std::ofstream out(emit);
    if (!out) throw UsageError("cannot write " + emit);
    write_baskets_jsonl(out, baskets);
    if (!out) throw UsageError("write to " + emit + " failed");
  }
  if (c.json) {
    Json j;
    j["command"] = "baskets";
    j["bound"] = to_json(bound);
    j["convention"] = c.convention;
    j["count"] = baskets.size();
    print_json(j);
  } else if (count || emit.empty()) {
    std::cout << baskets.size() << '\n';
  }
  return kOk;
}

// ---- table1 ---------------------------------------------------------------

int cmd_table1(const Common& c, const std::string& rows_flag) {
  const SearchConfig cfg = make_config(c);
  const auto rows = parse_int_list(rows_flag, "--rows");
  for (int f : rows) {
    if (f < 3 || f > 50) throw UsageError("--rows entries must lie in [3, 50]");
  }
  const auto baskets = load_baskets(c, cfg);
  bool all_ok = true;
  Json jrows = Json::array();
  for (int f : rows) {
    const auto res = run_pipeline(f, baskets, cfg);
    const auto* gold = golden::table1_row(f);
    std::optional<bool> match;
    if (gold) {
      const auto& g = gold->counts;
      const auto& k = res.counts;
      match = g[0] == k.c1 && g[1] == k.c2 && g[2] == k.c3 && g[3] == k.c4 && g[4] == k.c5;
      all_ok = all_ok && *match;
    }
    if (c.json) {
      Json r;
      r["f"] = f;
      r["counts"] = to_json(res.counts);
      if (gold) {
        r["reference"] = gold->counts;
        r["match"] = *match;
      } else {
        r["reference"] = nullptr;
        r["match"] = nullptr;
      }
      jrows.push_back(r);
    } else {
      std::cout << f << ": " << join_counts(res.counts) << '\n';
      if (match && !*match) {
        const auto& g = gold->counts;
        std::cout << std::string(std::to_string(f).size(), ' ') << "  reference " << g[0] << ' ' << g[1] << ' '
                  << g[2] << ' ' << g[3] << ' ' << g[4] << "  MISMATCH\n";
      }
    }
  }
  if (c.json) {
    Json j;
    j["command"] = "table1";
    j["config"] = config_json(cfg);
    j["rows"] = jrows;
    j["verified"] = all_ok;
    print_json(j);
  }
  return all_ok ? kOk : kMismatch;
}

// ---- search ---------------------------------------------------------------

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw UsageError("--f-range expects A..B");
  const auto a = parse_int_list(s.substr(0, dots), "--f-range");
  const auto b = parse_int_list(s.substr(dots + 2), "--f-range");
  if (a.size() != 1 || b.size() != 1) throw UsageError("--f-range expects A..B");
  return {a[0], b[0]};
}

std::string coeff_line(const FanoCandidate& cand, std::size_t terms) {
  std::string s;
  for (const auto& q : hilbert_coeffs(cand.numerics, terms - 1)) {
    if (!s.empty()) s += ' ';
    s += q.str();
  }
  return s;
}

int cmd_search(const Common& c, int f_single, const std::string& range, const std::string& emit, std::size_t terms) {
  SearchConfig cfg = make_config(c);
  int lo = f_single, hi = f_single;
  if (!range.empty()) std::tie(lo, hi) = parse_range(range);
  if (lo == 0) throw UsageError("give --f N or --f-range A..B");
  if (lo < 3 || hi > 50 || lo > hi) throw UsageError("search needs 3 <= f <= 50");
  if (terms == 0) throw UsageError("--terms must be positive");
  const auto baskets = load_baskets(c, cfg);

  std::vector<Json> records;
  Json per_f = Json::array();
  for (int f = lo; f <= hi; ++f) {
    const auto res = run_pipeline(f, baskets, cfg);
    Json jf;
    jf["f"] = f;
    jf["counts"] = to_json(res.counts);
    Json surv = Json::array();
    for (const auto& cand : res.survivors) {
      surv.push_back(to_json(cand, terms));
      records.push_back(surv.back());
    }
    jf["survivors"] = surv;
    per_f.push_back(jf);
    if (!c.json) {
      std::cout << "f = " << f << ": " << res.survivors.size() << " survivor(s)  [" << join_counts(res.counts)
                << "]\n";
      for (const auto& cand : res.survivors) {
        std::cout << "  basket " << to_json(cand.basket).dump() << "  A^3 = " << cand.numerics.a_cubed
                  << "  A.c2/12 = " << cand.numerics.ac2_over_12
                  << (cand.index_integral ? "" : "  (lcm*A^3 not integral)") << '\n'
                  << "    P = " << coeff_line(cand, terms) << " ...\n";
      }
    }
  }
  if (!emit.empty()) {
    std::ofstream out(emit);
    if (!out) throw UsageError("cannot write " + emit);
    write_jsonl(out, records);
  }
  if (c.json) {
    Json j;
    j["command"] = "search";
    j["config"] = config_json(cfg);
    j["results"] = per_f;
    print_json(j);
  }
  return kOk;
}

// ---- hilbert --------------------------------------------------------------

int cmd_hilbert(bool json, int f, const std::string& basket_text, std::size_t terms, bool closed) {
  if (f < 3) throw UsageError("hilbert needs f >= 3");
  Basket b;
  try {
    b = parse_basket(basket_text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --basket: ") + e.what());
  }
  try {
    require_coprime(f, b);
  } catch (const CoprimalityError& e) {
    throw UsageError(e.what());
  }
  const FanoNumerics num = make_numerics(f, b);
  const auto coeffs = hilbert_coeffs(num, terms);
  if (json) {
    Json j;
    j["command"] = "hilbert";
    j["f"] = f;
    j["basket"] = to_json(b);
    j["a_cubed"] = to_json(num.a_cubed);
    j["ac2_over_12"] = to_json(num.ac2_over_12);
    Json arr = Json::array();
    for (const auto& q : coeffs) arr.push_back(to_json(q));
    j["coefficients"] = arr;
    if (closed) j["closed_form"] = to_json(hilbert_series_closed(num));
    print_json(j);
    return kOk;
  }
  std::string line;
  for (const auto& q : coeffs) {
    if (!line.empty()) line += ' ';
    line += q.str();
  }
  std::cout << line << '\n';
  if (closed) {
    const auto cr = hilbert_series_closed(num);
    std::cout << "numerator: " << cr.numerator().str() << '\n' << "denominator:";
    for (int e : cr.denominator_exponents()) std::cout << " (1-t^" << e << ")";
    std::cout << '\n';
  }
  return kOk;
}

// ---- table2 ---------------------------------------------------------------

std::string verdict(const std::optional<bool>& v) {
  if (!v) return "-";
  return *v ? "ok" : "FAIL";
}

int cmd_table2(bool json) {
  bool all_ok = true;
  Json rows = Json::array();
  if (!json) {
    std::cout << std::left << std::setw(4) << "f" << std::setw(26) << "model" << std::setw(28) << "basket"
              << std::setw(7) << "index" << std::setw(8) << "vertex" << "series\n";
  }
  for (const auto& row : golden::table2()) {
    const WeightedModel m(row.weights, row.degree);
    const Basket b = parse_basket(row.basket);
    RowReport rep;
    std::string error;
    try {
      rep = verify_row(row.f, b, m);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = error.empty() && rep.passed();
    all_ok = all_ok && ok;
    if (json) {
      Json r;
      r["f"] = row.f;
      r["model"] = m.str();
      r["basket"] = to_json(b);
      r["index_ok"] = rep.index_ok;
      r["basket_ok"] = rep.basket_ok ? Json(*rep.basket_ok) : Json(nullptr);
      r["series_ok"] = rep.series_ok ? Json(*rep.series_ok) : Json(nullptr);
      if (!error.empty()) r["error"] = error;
      r["passed"] = ok;
      rows.push_back(r);
    } else {
      std::cout << std::setw(4) << row.f << std::setw(26) << m.str() << std::setw(28) << to_display_string(b)
                << std::setw(7) << (rep.index_ok ? "ok" : "FAIL") << std::setw(8) << verdict(rep.basket_ok)
                << verdict(rep.series_ok);
      if (!error.empty()) std::cout << "  error: " << error;
      std::cout << '\n';
    }
  }
  if (json) {
    Json j;
    j["command"] = "table2";
    j["rows"] = rows;
    j["verified"] = all_ok;
    print_json(j);
  }
  return all_ok ? kOk : kMismatch;
}

// ---- bmax -----------------------------------------------------------------

std::string seq_string(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

int cmd_bmax(const Common& c) {
  const Rational bound = parse_bound(c.bound);
  const auto res = bmax(bound);
  const bool is_default = bound == Rational(24);
  const std::vector<int> expected(golden::bmax_argmax.begin(), golden::bmax_argmax.end());
  const bool ok = !is_default ||
                  (res.max == Rational(golden::bmax_value) && res.argmax.size() == 1 && res.argmax[0] == expected);
  if (c.json) {
    Json j;
    j["command"] = "bmax";
    j["bound"] = to_json(bound);
    j["max"] = to_json(res.max);
    j["argmax"] = res.argmax;
    j["sequences_examined"] = res.sequences_examined;
    j["verified"] = is_default ? Json(ok) : Json(nullptr);
    print_json(j);
  } else {
    std::cout << res.max << " at";
    for (const auto& a : res.argmax) std::cout << ' ' << seq_string(a);
    std::cout << '\n';
    if (!ok) std::cout << "MISMATCH: expected " << golden::bmax_value << " at " << seq_string(expected) << '\n';
  }
  return ok ? kOk : kMismatch;
}

// ---- kbound ---------------------------------------------------------------

int cmd_kbound(const Common& c, int fmin, int fmax) {
  SearchConfig cfg = make_config(c);
  if (fmin < 1 || fmax > 50 || fmin > fmax) throw UsageError("kbound needs 1 <= fmin <= fmax <= 50");
  cfg.f_min = fmin;
  cfg.f_max = fmax;
  const auto res = k3_max(cfg);
  const Rational expected = Rational::parse(golden::k3_bound);
  const bool ok = res.witness && res.max == expected;
  if (c.json) {
    Json j;
    j["command"] = "kbound";
    j["config"] = config_json(cfg);
    j["f_min"] = fmin;
    j["f_max"] = fmax;
    j["max"] = res.witness ? to_json(res.max) : Json(nullptr);
    if (res.witness) {
      Json w;
      w["f"] = res.witness->f;
      w["basket"] = to_json(res.witness->basket);
      w["a_cubed"] = to_json(res.witness->a_cubed);
      j["witness"] = w;
    }
    Json per = Json::object();
    for (const auto& [f, rec] : res.best_per_f) {
      per[std::to_string(f)] = rec ? to_json(rec->anticanonical_degree) : Json(nullptr);
    }
    j["best_per_f"] = per;
    j["records_examined"] = res.records_examined;
    j["expected"] = golden::k3_bound;
    j["verified"] = ok;
    print_json(j);
  } else {
    if (!res.witness) {
      std::cout << "max = none (no feasible record)\n";
    } else {
      std::cout << "max = " << res.max << "  at f = " << res.witness->f << ", basket "
                << to_display_string(res.witness->basket) << ", A^3 = " << res.witness->a_cubed << '\n';
    }
    for (const auto& [f, rec] : res.best_per_f) {
      if (rec) std::cout << "  f = " << std::setw(2) << f << "  " << rec->anticanonical_degree << '\n';
    }
    if (!ok) std::cout << "MISMATCH: expected max = " << golden::k3_bound << '\n';
  }
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Riemann-Roch toolkit for Q-Fano 3-folds of high Fano index"};
  app.require_subcommand(1);

  Common c_baskets, c_table1, c_search, c_bmax, c_kbound;
  bool count = false;
  std::string baskets_emit;
  auto* s_baskets = app.add_subcommand("baskets", "enumerate baskets with sigma < bound");
  add_common(s_baskets, c_baskets, false);
  s_baskets->add_flag("--count", count, "print the number of baskets");
  s_baskets->add_option("--emit", baskets_emit, "write baskets as JSON Lines");

  std::string rows = "13,19,20,23,24,50";
  auto* s_table1 = app.add_subcommand("table1", "stage counts against the reference values");
  add_common(s_table1, c_table1, true);
  s_table1->add_option("--rows", rows, "comma-separated Fano indices in [3, 50]")->capture_default_str();

  int search_f = 0;
  std::string search_range, search_emit;
  std::size_t search_terms = 21;
  auto* s_search = app.add_subcommand("search", "run the filters and list survivors");
  add_common(s_search, c_search, true);
  auto* opt_f = s_search->add_option("--f", search_f, "Fano index");
  auto* opt_range = s_search->add_option("--f-range", search_range, "index range A..B");
  opt_f->excludes(opt_range);
  s_search->add_option("--emit", search_emit, "write survivors as JSON Lines");
  s_search->add_option("--terms", search_terms, "Hilbert coefficients to show")->capture_default_str();

  int hilbert_f = 0;
  std::string hilbert_basket;
  std::size_t hilbert_terms = 10;
  bool hilbert_closed = false, hilbert_json = false;
  auto* s_hilbert = app.add_subcommand("hilbert", "Hilbert series of (f, basket)");
  s_hilbert->add_option("--f", hilbert_f, "Fano index (>= 3)")->required();
  s_hilbert->add_option("--basket", hilbert_basket, "basket as \"r,a;r,a;...\"")->required();
  s_hilbert->add_option("--terms", hilbert_terms, "print P_0..P_K")->capture_default_str();
  s_hilbert->add_flag("--closed-form", hilbert_closed, "also print the closed form");
  s_hilbert->add_flag("--json", hilbert_json, "machine-readable output");

  bool table2_json = false;
  auto* s_table2 = app.add_subcommand("table2", "cross-check weighted projective examples");
  s_table2->add_flag("--json", table2_json, "machine-readable output");

  auto* s_bmax = app.add_subcommand("bmax", "maximize lcm(r_k) (24 - sum(r_k - 1/r_k))");
  s_bmax->add_option("--bound", c_bmax.bound, "sigma bound")->capture_default_str();
  s_bmax->add_flag("--json", c_bmax.json, "machine-readable output");

  int fmin = 1, fmax = 50;
  auto* s_kbound = app.add_subcommand("kbound", "maximum of f^3 A^3");
  add_common(s_kbound, c_kbound, true);
  s_kbound->add_option("--fmin", fmin, "smallest index")->capture_default_str();
  s_kbound->add_option("--fmax", fmax, "largest index")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*s_baskets) return cmd_baskets(c_baskets, count, baskets_emit);
    if (*s_table1) return cmd_table1(c_table1, rows);
    if (*s_search) return cmd_search(c_search, search_f, search_range, search_emit, search_terms);
    if (*s_hilbert) return cmd_hilbert(hilbert_json, hilbert_f, hilbert_basket, hilbert_terms, hilbert_closed);
    if (*s_table2) return cmd_table2(table2_json);
    if (*s_bmax) return cmd_bmax(c_bmax);
    if (*s_kbound) return cmd_kbound(c_kbound, fmin, fmax);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
