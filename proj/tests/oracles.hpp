// SPDX-License-Identifier: MIT
// Independent reference implementations used only by the tests.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// Transpose by counting the cells (i, j) of the Young diagram column by column.
inline std::vector<int> transpose_by_cells(const std::vector<int>& p) {
  std::set<std::pair<int, int>> cells;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    for (int j = 0; j < p[i]; ++j) cells.insert({j, i});
  std::map<int, int> rows;
  for (auto [r, c] : cells) ++rows[r];
  std::vector<int> out;
  for (auto [r, k] : rows) out.push_back(k);
  return out;
}

// Number of partitions of n, via the recurrence p(n, k) on the largest part.
inline long count_partitions(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int m = k; m <= n; ++m) p[m] += p[m - k];
  return n >= 0 ? p[n] : 0;
}

inline long count_bipartitions(int n) {
  if (n < 0) return 0;
  long c = 0;
  for (int a = 0; a <= n; ++a) c += count_partitions(a) * count_partitions(n - a);
  return c;
}

// Rank from the definition: sum of entries minus floor(((|A|+|B|-1)/2)^2),
// evaluated in exact rational arithmetic with doubled values.
inline int symbol_rank(const std::vector<int>& a, const std::vector<int>& b) {
  long sum = 0;
  for (int x : a) sum += x;
  for (int x : b) sum += x;
  const long len = static_cast<long>(a.size() + b.size());
  if (len == 0) return 0;
  const long num = (len - 1) * (len - 1);  // ((len-1)/2)^2 = num/4
  return static_cast<int>(sum - num / 4);
}

// All weakly decreasing sequences of length `len` with entries in [0, max].
inline void decreasing_sequences(int len, int max, std::vector<std::vector<int>>& out,
                                 std::vector<int> cur = {}) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  const int cap = cur.empty() ? max : cur.back();
  for (int v = cap; v >= 0; --v) {
    cur.push_back(v);
    decreasing_sequences(len, max, out, cur);
    cur.pop_back();
  }
}

}  // namespace oracle

namespace oracle {

// Staircase subtraction written directly from the row formula.
inline std::pair<std::vector<int>, std::vector<int>> upsilon(const std::vector<int>& a, const std::vector<int>& b) {
  auto row = [](const std::vector<int>& r) {
    std::vector<int> out;
    const int m = static_cast<int>(r.size());
    for (int i = 0; i < m; ++i)
      if (r[i] - (m - 1 - i) > 0) out.push_back(r[i] - (m - 1 - i));
    return out;
  };
  return {row(a), row(b)};
}

inline bool precede(const std::vector<int>& l, const std::vector<int>& m) {
  const std::size_t len = std::max(l.size(), m.size());
  for (std::size_t i = 0; i < len; ++i) {
    const int x = i < l.size() ? l[i] : 0, y = i < m.size() ? m[i] : 0;
    if (!(y - 1 <= x && x <= y)) return false;
  }
  return true;
}

// Union of the four G-sets; rows given as (top, bottom).
inline bool in_G(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& ap,
                 const std::vector<int>& bp) {
  const auto [up, lo] = upsilon(a, b);
  const auto [upp, lop] = upsilon(ap, bp);
  const int d = static_cast<int>(a.size()) - static_cast<int>(b.size());
  const int dp = static_cast<int>(ap.size()) - static_cast<int>(bp.size());
  if (d > 0)
    return (dp == d - 1 && precede(lop, lo) && precede(up, upp)) ||
           (dp == -d - 1 && precede(lop, up) && precede(lo, upp));
  if (d < 0)
    return (dp == d + 1 && precede(upp, up) && precede(lo, lop)) ||
           (dp == -d + 1 && precede(upp, lo) && precede(up, lop));
  return false;
}

}  // namespace oracle
