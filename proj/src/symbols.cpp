// SPDX-License-Identifier: MIT
#include "sympdesc/symbols.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "internal.hpp"
#include "sympdesc/errors.hpp"

namespace sympdesc {

namespace {

bool strictly_decreasing_nonneg(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return false;
    if (i + 1 < v.size() && v[i] <= v[i + 1]) return false;
  }
  return true;
}

std::vector<int> unstaircase(const std::vector<int>& row) {
  const int m = static_cast<int>(row.size());
  std::vector<int> out(m);
  for (int i = 1; i <= m; ++i) out[i - 1] = row[i - 1] - (m - i);
  return out;
}

Partition positive_only(const std::vector<int>& v) {
  Partition p;
  for (int x : v)
    if (x > 0) p.push_back(x);
  return p;
}

std::vector<int> add_staircase(const Partition& p, int len) {
  std::vector<int> row(len, 0);
  for (int i = 1; i <= len; ++i) row[i - 1] = part(p, i) + (len - i);
  return row;
}

}  // namespace

bool is_valid_symbol(const Symbol& s) noexcept {
  return strictly_decreasing_nonneg(s.top) && strictly_decreasing_nonneg(s.bottom);
}

Symbol make_symbol(std::vector<int> top, std::vector<int> bottom) {
  Symbol s{std::move(top), std::move(bottom)};
  if (!is_valid_symbol(s))
    fail(ErrorCode::InvalidArgument, "symbol rows must be strictly decreasing naturals: " + to_text(s));
  return normalize(std::move(s));
}

int rank(const Symbol& s) noexcept {
  const int total = std::accumulate(s.top.begin(), s.top.end(), 0) +
                    std::accumulate(s.bottom.begin(), s.bottom.end(), 0);
  const int len = static_cast<int>(s.top.size() + s.bottom.size());
  if (len == 0) return 0;
  return total - ((len - 1) * (len - 1)) / 4;
}

int defect(const Symbol& s) noexcept {
  return static_cast<int>(s.top.size()) - static_cast<int>(s.bottom.size());
}

Symbol transpose(const Symbol& s) { return {s.bottom, s.top}; }

Symbol shift(const Symbol& s, int times) {
  Symbol r = s;
  for (int t = 0; t < times; ++t) {
    for (int& x : r.top) ++x;
    for (int& x : r.bottom) ++x;
    r.top.push_back(0);
    r.bottom.push_back(0);
  }
  return r;
}

Symbol normalize(Symbol s) {
  while (!s.top.empty() && !s.bottom.empty() && s.top.back() == 0 && s.bottom.back() == 0) {
    s.top.pop_back();
    s.bottom.pop_back();
    for (int& x : s.top) --x;
    for (int& x : s.bottom) --x;
  }
  return s;
}

bool is_degenerate(const Symbol& s) noexcept { return s.top == s.bottom; }

bool is_special(const Symbol& s) noexcept {
  const int d = defect(s);
  if (d != 0 && d != 1) return false;
  // a1 >= b1 >= a2 >= b2 >= ...
  std::vector<int> merged;
  for (std::size_t i = 0; i < s.top.size(); ++i) {
    merged.push_back(s.top[i]);
    if (i < s.bottom.size()) merged.push_back(s.bottom[i]);
  }
  return std::is_sorted(merged.begin(), merged.end(), std::greater<>());
}

std::pair<std::vector<int>, std::vector<int>> upsilon_padded(const Symbol& s) {
  return {unstaircase(s.top), unstaircase(s.bottom)};
}

BiPartition upsilon(const Symbol& s) {
  auto [a, b] = upsilon_padded(s);
  return {positive_only(a), positive_only(b)};
}

Symbol upsilon_inverse(const BiPartition& b, int def) {
  const int lt = static_cast<int>(b.top.size()), lb = static_cast<int>(b.bottom.size());
  const int m2 = std::max({lb, lt - def, 0, -def});
  const int m1 = m2 + def;
  return normalize({add_staircase(b.top, m1), add_staircase(b.bottom, m2)});
}

int staircase_correction(int def) noexcept {
  if (def % 2) return ((def + 1) / 2) * ((def - 1) / 2);
  return (def / 2) * (def / 2);
}

Symbol special_closure(const Symbol& s) {
  std::vector<int> e = s.top;
  e.insert(e.end(), s.bottom.begin(), s.bottom.end());
  std::sort(e.begin(), e.end(), std::greater<>());
  Symbol z;
  for (std::size_t i = 0; i < e.size(); ++i) (i % 2 ? z.bottom : z.top).push_back(e[i]);
  if (!is_valid_symbol(z))
    fail(ErrorCode::NoSpecialArrangement, "no special arrangement for " + to_text(s));
  return normalize(std::move(z));
}

std::vector<Symbol> enumerate_symbols(int rank_, int def) {
  std::vector<Symbol> out;
  const int rest = rank_ - staircase_correction(def);
  if (rest < 0) return out;
  for (const auto& b : bipartitions_of(rest)) out.push_back(upsilon_inverse(b, def));
  return out;
}

SymbolClass symbol_class(const Symbol& s) {
  Symbol a = normalize(s);
  Symbol b = normalize(transpose(a));
  const int d = defect(a);
  if (d > 0) return {a};
  if (d < 0) return {b};
  return {std::min(a, b)};
}

std::string to_text(const Symbol& s) {
  return to_text(Partition(s.top)) + ";" + to_text(Partition(s.bottom));
}

Symbol parse_symbol(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos)
    fail(ErrorCode::Parse, "symbol text needs exactly one ';': '" + std::string(text) + "'");
  Symbol s{detail_parse_int_list(text.substr(0, semi)), detail_parse_int_list(text.substr(semi + 1))};
  if (!is_valid_symbol(s))
    fail(ErrorCode::Parse, "symbol rows must be strictly decreasing naturals: '" + std::string(text) + "'");
  return normalize(std::move(s));
}

}  // namespace sympdesc
