// Reference values used for regression checks by the CLI and the
// test suites.  Each block notes what the numbers are, not how they were
// obtained here.
#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace qfano::golden {

// Stage counts per Fano index f: #(1) baskets with sigma < 24, #(2) after
// gcd(f, r_k) = 1, #(3) after A^3 > 0, #(4) after the vanishing
// chi(nA) = 0 for -f < n < 0, #(5) after the stability inequality.
struct Table1Row {
  int f;
  std::array<std::uint64_t, 5> counts;
};

inline constexpr std::array<Table1Row, 6> table1 = {{
    {13, {25161, 23187, 6622, 6, 2}},
    {19, {25161, 24972, 7173, 1, 1}},
    {20, {25161, 714, 417, 0, 0}},
    {23, {25161, 25139, 9261, 0, 0}},
    {24, {25161, 478, 329, 0, 0}},
    {50, {25161, 714, 167, 0, 0}},
}};

inline const Table1Row* table1_row(int f) {
  for (const auto& row : table1) {
    if (row.f == f) return &row;
  }
  return nullptr;
}

// The unique index-19 candidate: P(3,4,5,7).
inline constexpr std::string_view f19_basket = "3,1;4,1;5,2;7,2";
inline constexpr std::string_view f19_a_cubed = "1/420";
inline constexpr std::array<int, 4> f19_weights = {3, 4, 5, 7};

// Indices realized by some example, and those excluded by the search.
inline constexpr std::array<int, 14> realized_indices = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 17, 19};
inline constexpr std::array<int, 5> excluded_below_20 = {12, 14, 15, 16, 18};

// Examples of Q-Fano 3-folds by index.  degree 0 is an ambient weighted
// 3-space; otherwise a hypersurface of that degree in a weighted 4-space.
struct Table2Row {
  int f;
  std::vector<int> weights;
  int degree;
  std::string_view basket;
};

inline const std::vector<Table2Row>& table2() {
  static const std::vector<Table2Row> rows = {
      {19, {3, 4, 5, 7}, 0, "3,1;4,1;5,2;7,2"},
      {17, {2, 3, 5, 7}, 0, "2,1;3,1;5,1;7,3"},
      {13, {1, 3, 4, 5}, 0, "3,1;4,1;5,2"},
      {11, {1, 2, 3, 5}, 0, "2,1;3,1;5,2"},
      {9, {1, 2, 3, 4, 5}, 6, "2,1;4,1;5,2"},
      {8, {1, 2, 3, 3, 5}, 6, "3,1;3,1;5,1"},
      {7, {1, 1, 2, 3}, 0, "2,1;3,1"},
      {6, {1, 1, 2, 3, 5}, 6, "5,2"},
      {5, {1, 1, 1, 2}, 0, "2,1"},
      {4, {1, 1, 1, 1}, 0, ""},
      {3, {1, 1, 1, 1, 1}, 2, ""},
      {2, {1, 1, 1, 1, 1}, 3, ""},
      // A quartic in P^5 would have index 2; the index-1 example is the
      // quartic 3-fold in P^4.
      {1, {1, 1, 1, 1, 1}, 4, ""},
  };
  return rows;
}

// Maximum of lcm(r_k) (24 - sum (r_k - 1/r_k)) and its unique maximizer.
inline constexpr std::int64_t bmax_value = 2489;
inline constexpr std::array<int, 4> bmax_argmax = {3, 4, 5, 7};
// Remaining coprime 4-term candidates with sigma < 24, all strictly below.
inline const std::vector<std::vector<int>>& bmax_runners_up() {
  static const std::vector<std::vector<int>> seqs = {{2, 5, 7, 9}, {3, 5, 7, 8}, {2, 3, 5, 7}};
  return seqs;
}

// Upper bound for (-K_X)^3 = f^3 A^3: 2 * 5^3 / 3.
inline constexpr std::string_view k3_bound = "250/3";

}  // namespace qfano::golden
