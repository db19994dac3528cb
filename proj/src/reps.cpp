// SPDX-License-Identifier: MIT
#include "sympdesc/reps.hpp"

#include "sympdesc/errors.hpp"

namespace sympdesc {

namespace {

int mod4(int d) { return ((d % 4) + 4) % 4; }

}  // namespace

UnipotentRep make_unipotent(const Symbol& s) {
  if (!is_valid_symbol(s)) fail(ErrorCode::InvalidArgument, "invalid symbol " + to_text(s));
  if (mod4(defect(s)) != 1)
    fail(ErrorCode::InvalidArgument, "unipotent symbols need defect 1 mod 4: " + to_text(s));
  return {normalize(s)};
}

ThetaRep make_theta(const Symbol& s) {
  if (!is_valid_symbol(s)) fail(ErrorCode::InvalidArgument, "invalid symbol " + to_text(s));
  if (defect(s) % 2) fail(ErrorCode::InvalidArgument, "theta symbols need even defect: " + to_text(s));
  return {symbol_class(s)};
}

CaseARep make_case_a(std::vector<CaseAEntry> entries) {
  const int n = static_cast<int>(entries.size());
  for (int j = 0; j < n; ++j) {
    const auto& e = entries[j];
    if (e.degree < 1) fail(ErrorCode::InvalidArgument, "entry " + std::to_string(j) + ": degree must be positive");
    if (!is_partition(e.partition))
      fail(ErrorCode::InvalidArgument, "entry " + std::to_string(j) + ": not a partition");
    if (e.partner < 0 || e.partner >= n)
      fail(ErrorCode::InvalidArgument, "entry " + std::to_string(j) + ": partner out of range");
    const auto& p = entries[e.partner];
    if (p.partner != j) fail(ErrorCode::InvalidArgument, "entry " + std::to_string(j) + ": pairing is not an involution");
    if (p.degree != e.degree)
      fail(ErrorCode::InvalidArgument, "entry " + std::to_string(j) + ": paired degrees differ");
  }
  return {std::move(entries)};
}

Representation rep_from_symbol(const Symbol& s) {
  const Symbol n = normalize(s);
  if (defect(n) % 2 == 0) return make_theta(n);
  if (mod4(defect(n)) == 3) return make_unipotent(normalize(transpose(n)));
  return make_unipotent(n);
}

bool is_theta_rep(const Symbol& s) noexcept { return defect(s) % 2 == 0; }

int rank(const CaseARep& r) noexcept {
  int n = 0;
  for (const auto& e : r.entries) n += e.degree * size(e.partition);
  return n;
}

int rank(const GeneralRep& r) noexcept {
  return rank(r.case_a) + rank(r.unipotent) + rank(r.theta.representative);
}

int rank(const Representation& r) noexcept {
  struct {
    int operator()(const UnipotentRep& u) const { return rank(u.symbol); }
    int operator()(const ThetaRep& t) const { return rank(t.symbol_class.representative); }
    int operator()(const CaseARep& c) const { return rank(c); }
  } v;
  return std::visit(v, r);
}

bool in_G(const Symbol& lambda, const Symbol& lambda_prime) {
  const BiPartition u = upsilon(lambda), v = upsilon(lambda_prime);
  const int d = defect(lambda), dp = defect(lambda_prime);
  if (d > 0) {
    if (dp == d - 1 && precede(v.bottom, u.bottom) && precede(u.top, v.top)) return true;
    if (dp == -d - 1 && precede(v.bottom, u.top) && precede(u.bottom, v.top)) return true;
  } else if (d < 0) {
    if (dp == d + 1 && precede(v.top, u.top) && precede(u.bottom, v.bottom)) return true;
    if (dp == -d + 1 && precede(v.top, u.bottom) && precede(u.top, v.bottom)) return true;
  }
  return false;
}

int multiplicity_unip_theta(const UnipotentRep& u, const ThetaRep& t) {
  const Symbol& s = t.symbol_class.representative;
  return (in_G(u.symbol, s) || in_G(u.symbol, normalize(transpose(s)))) ? 1 : 0;
}

int multiplicity_caseA_first_occurrence(const CaseARep& pi, const CaseARep& pi_prime) {
  const auto& a = pi.entries;
  const auto& b = pi_prime.entries;
  if (a.size() != b.size())
    fail(ErrorCode::RankMismatch, "Case A entry lists have different lengths");
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j].degree != b[j].degree || a[j].partner != b[j].partner)
      fail(ErrorCode::RankMismatch, "Case A entry " + std::to_string(j) + " differs in degree or pairing");
  for (std::size_t j = 0; j < a.size(); ++j)
    if (b[j].partition != remove_columns(a[a[j].partner].partition, 1)) return 0;
  return 1;
}

int multiplicity_general(const GeneralRep& pi, const GeneralRep& pi_prime) {
  if (!multiplicity_caseA_first_occurrence(pi.case_a, pi_prime.case_a)) return 0;
  auto pairs = [](const Symbol& unip, const SymbolClass& theta) {
    const Symbol& s = theta.representative;
    return in_G(unip, s) || in_G(unip, normalize(transpose(s)));
  };
  return (pairs(pi.unipotent, pi_prime.theta) && pairs(pi_prime.unipotent, pi.theta)) ? 1 : 0;
}

UnipotentRep unipotent_cuspidal(int k) {
  if (k < 0) fail(ErrorCode::InvalidArgument, "k must be nonnegative");
  Symbol s;
  for (int v = 2 * k; v >= 0; --v) s.top.push_back(v);
  if (k % 2) s = transpose(s);
  return {s};
}

bool is_cuspidal_symbol(const Symbol& s) noexcept {
  if (rank(s) == 0) return false;
  const auto& row = s.top.empty() ? s.bottom : s.top;
  if (!s.top.empty() && !s.bottom.empty()) return false;
  const int m = static_cast<int>(row.size());
  for (int i = 0; i < m; ++i)
    if (row[i] != m - 1 - i) return false;
  return true;
}

}  // namespace sympdesc
