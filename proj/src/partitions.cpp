// SPDX-License-Identifier: MIT
#include "sympdesc/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "sympdesc/errors.hpp"
#include "internal.hpp"

namespace sympdesc {

namespace {

bool weakly_decreasing_nonneg(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return false;
    if (i + 1 < v.size() && v[i] < v[i + 1]) return false;
  }
  return true;
}

Partition drop_zeros(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

bool is_partition(const Partition& p) noexcept {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

Partition make_partition(std::vector<int> values) {
  for (int v : values)
    if (v < 0) fail(ErrorCode::InvalidArgument, "negative part " + std::to_string(v));
  std::sort(values.begin(), values.end(), std::greater<>());
  return drop_zeros(std::move(values));
}

int size(const Partition& p) noexcept { return std::accumulate(p.begin(), p.end(), 0); }

int size(const BiPartition& b) noexcept { return size(b.top) + size(b.bottom); }

int part(const Partition& p, int i) noexcept {
  return (i >= 1 && i <= static_cast<int>(p.size())) ? p[i - 1] : 0;
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  t.reserve(p.front());
  for (int j = 1; j <= p.front(); ++j) t.push_back(transpose_part(p, j));
  return t;
}

int transpose_part(const Partition& p, int i) noexcept {
  if (i < 1) return 0;
  int c = 0;
  for (int x : p) {
    if (x >= i) ++c;
    else break;
  }
  return c;
}

Partition remove_columns(const Partition& p, int j) {
  if (j < 0) fail(ErrorCode::InvalidArgument, "negative column count");
  Partition r;
  for (int x : p)
    if (x > j) r.push_back(x - j);
  return r;
}

bool precede(const Partition& lambda, const Partition& mu) noexcept {
  const int len = static_cast<int>(std::max(lambda.size(), mu.size()));
  for (int i = 1; i <= len; ++i) {
    const int l = part(lambda, i), m = part(mu, i);
    if (l > m || l < m - 1) return false;
  }
  return true;
}

std::pair<std::vector<int>, std::vector<int>> psi_split_padded(const Partition& lambda) {
  const int k = static_cast<int>(lambda.size());
  std::vector<int> odd_star, even_star;
  for (int i = 1; i <= k; ++i) {
    const int star = lambda[i - 1] + (k - i);
    if (star % 2) odd_star.push_back((star - 1) / 2);
    else even_star.push_back(star / 2);
  }
  // Entries of lambda* are strictly decreasing, so each half is too.
  auto unstar = [](std::vector<int> v) {
    const int m = static_cast<int>(v.size());
    for (int i = 1; i <= m; ++i) v[i - 1] -= (m - i);
    return v;
  };
  return {unstar(std::move(odd_star)), unstar(std::move(even_star))};
}

BiPartition psi_split(const Partition& lambda) {
  auto [eta, zeta] = psi_split_padded(lambda);
  return {drop_zeros(std::move(eta)), drop_zeros(std::move(zeta))};
}

Partition psi_merge(const std::vector<int>& eta, const std::vector<int>& zeta) {
  if (!weakly_decreasing_nonneg(eta) || !weakly_decreasing_nonneg(zeta))
    fail(ErrorCode::NotInvertible, "psi_merge: components must be weakly decreasing and nonnegative");
  const int m = static_cast<int>(eta.size()), r = static_cast<int>(zeta.size());
  std::vector<int> stars;
  stars.reserve(m + r);
  for (int i = 1; i <= m; ++i) stars.push_back(2 * (eta[i - 1] + (m - i)) + 1);
  for (int i = 1; i <= r; ++i) stars.push_back(2 * (zeta[i - 1] + (r - i)));
  std::sort(stars.begin(), stars.end(), std::greater<>());
  const int k = m + r;
  std::vector<int> lambda(k);
  for (int i = 1; i <= k; ++i) lambda[i - 1] = stars[i - 1] - (k - i);
  if (!weakly_decreasing_nonneg(lambda))
    fail(ErrorCode::NotInvertible, "psi_merge: unstarred sequence is not a partition");
  return drop_zeros(std::move(lambda));
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (size(lambda) != size(mu))
    fail(ErrorCode::SizeMismatch, "dominance_leq: " + to_text(lambda) + " vs " + to_text(mu));
  const int len = static_cast<int>(std::max(lambda.size(), mu.size()));
  int sl = 0, sm = 0;
  for (int i = 1; i <= len; ++i) {
    sl += part(lambda, i);
    sm += part(mu, i);
    if (sl > sm) return false;
  }
  return true;
}

Partition scale_parts(const Partition& p, int a) {
  if (a < 0) fail(ErrorCode::InvalidArgument, "negative scale");
  Partition r;
  if (a == 0) return r;
  for (int x : p) r.push_back(a * x);
  return r;
}

std::vector<Partition> partitions_of(int n, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

std::vector<BiPartition> bipartitions_of(int n) {
  std::vector<BiPartition> out;
  for (int a = 0; a <= n; ++a)
    for (const auto& x : partitions_of(a))
      for (const auto& y : partitions_of(n - a)) out.push_back({x, y});
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_text(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    const auto tok = trim(text.substr(0, comma));
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      fail(ErrorCode::Parse, "bad integer '" + std::string(tok) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  auto v = parse_int_list(text);
  if (!is_partition(v)) fail(ErrorCode::Parse, "not a partition: '" + std::string(text) + "'");
  return v;
}

// Shared with the symbol parser.
std::vector<int> detail_parse_int_list(std::string_view text) { return parse_int_list(text); }

}  // namespace sympdesc
