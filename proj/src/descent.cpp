// SPDX-License-Identifier: MIT
#include "sympdesc/descent.hpp"

#include <algorithm>
#include <limits>

#include "sympdesc/errors.hpp"

namespace sympdesc {

namespace {

int mod4(int d) { return ((d % 4) + 4) % 4; }

Partition rm1(const Partition& p) { return remove_columns(p, 1); }

int length(const Partition& p) { return static_cast<int>(p.size()); }

struct SymbolStep {
  int ell0 = 0;
  std::vector<Symbol> children;
};

// Keeps the image of smaller rank, or both when the ranks agree. Both are kept
// even when equal, as a constituent of multiplicity two.
SymbolStep pick(int n, const Symbol& plus, const Symbol& minus) {
  const int rp = rank(plus), rm = rank(minus);
  SymbolStep st;
  st.ell0 = n - std::min(rp, rm);
  if (rp <= rm) st.children.push_back(plus);
  if (rm <= rp) st.children.push_back(minus);
  return st;
}

SymbolStep symbol_step(const Symbol& s) {
  const int n = rank(s);
  if (defect(s) % 2) {
    SymbolStep st = pick(n, dg_un(s, Sign::Plus), dg_un(s, Sign::Minus));
    for (auto& c : st.children) c = symbol_class(c).representative;
    return st;
  }
  return pick(n, dg_theta(s, Sign::Plus), dg_theta(s, Sign::Minus));
}

const Symbol& symbol_of(const Representation& rep) {
  if (auto* u = std::get_if<UnipotentRep>(&rep)) return u->symbol;
  return std::get<ThetaRep>(rep).symbol_class.representative;
}

int case_a_first_index(const CaseARep& r) {
  int l = 0;
  for (const auto& e : r.entries) l += e.degree * transpose_part(e.partition, 1);
  return l;
}

}  // namespace

Symbol dg_un(const Symbol& s, Sign sign) {
  const int d = defect(s);
  if (d % 2 == 0) fail(ErrorCode::InvalidArgument, "dg_un needs odd defect: " + to_text(s));
  const BiPartition b = upsilon(s);
  const bool plus = sign == Sign::Plus;
  if (d > 0) {
    if (plus) return upsilon_inverse({b.bottom, rm1(b.top)}, -d - 1);
    return upsilon_inverse({b.top, rm1(b.bottom)}, d - 1);
  }
  if (plus) return upsilon_inverse({rm1(b.bottom), b.top}, -d + 1);
  return upsilon_inverse({rm1(b.top), b.bottom}, d + 1);
}

Symbol dg_theta_member(const Symbol& s, Sign sign) {
  const int d = defect(s);
  if (d % 2) fail(ErrorCode::InvalidArgument, "dg_theta needs even defect: " + to_text(s));
  const BiPartition b = upsilon(s);
  const bool plus = sign == Sign::Plus;
  if (d >= 0) {
    if (plus) return upsilon_inverse({rm1(b.top), b.bottom}, d + 1);
    return upsilon_inverse({rm1(b.bottom), b.top}, -d + 1);
  }
  if (plus) return upsilon_inverse({b.top, rm1(b.bottom)}, d - 1);
  return upsilon_inverse({b.bottom, rm1(b.top)}, -d - 1);
}

Symbol dg_theta(const Symbol& s, Sign sign) {
  const Symbol rep = symbol_class(s).representative;
  for (const Symbol& member : {rep, normalize(transpose(rep))}) {
    Symbol r = dg_theta_member(member, sign);
    if (mod4(defect(r)) == 1) return r;
  }
  fail(ErrorCode::Internal, "no member of the class of " + to_text(s) + " has a unipotent image");
}

std::pair<int, int> boundary_values(const Symbol& s) {
  const int d = defect(s);
  const BiPartition b = upsilon(s);
  const int lt = length(b.top), lb = length(b.bottom);
  if (d % 2) {
    const int k = (std::abs(d) - 1) / 2;
    if (d > 0) return {lt - (k + 1), lb + k};
    return {lb - (k + 1), lt + k};
  }
  const int k = std::abs(d) / 2;
  if (d >= 0) return {lt - k, lb + k};
  return {lb - k, lt + k};
}

int first_index(const Symbol& s) {
  if (rank(s) == 0) return 0;
  auto [x, y] = boundary_values(s);
  return std::max(x, y);
}

int first_index(const Representation& rep) {
  if (auto* c = std::get_if<CaseARep>(&rep)) return case_a_first_index(*c);
  return first_index(symbol_of(rep));
}

DescentStep descend(const Representation& rep) {
  DescentStep out;
  if (rank(rep) == 0) return out;
  if (auto* c = std::get_if<CaseARep>(&rep)) {
    out.ell0 = case_a_first_index(*c);
    CaseARep child = *c;
    for (std::size_t j = 0; j < child.entries.size(); ++j)
      child.entries[j].partition = rm1(c->entries[c->entries[j].partner].partition);
    out.components.push_back(std::move(child));
    return out;
  }
  const bool theta = std::holds_alternative<ThetaRep>(rep);
  SymbolStep st = symbol_step(symbol_of(rep));
  out.ell0 = st.ell0;
  for (auto& c : st.children) {
    if (theta) out.components.push_back(UnipotentRep{std::move(c)});
    else out.components.push_back(ThetaRep{SymbolClass{std::move(c)}});
  }
  return out;
}

DescentNode descent_tree(const Representation& rep) {
  DescentNode node{rep, 0, {}};
  DescentStep st = descend(rep);
  node.ell0 = st.ell0;
  for (const auto& c : st.components) node.children.push_back(descent_tree(c));
  return node;
}

std::vector<DescentIndex> all_indices(const DescentNode& tree) {
  if (tree.children.empty()) return {DescentIndex{}};
  std::vector<DescentIndex> out;
  for (const auto& c : tree.children)
    for (auto& tail : all_indices(c)) {
      DescentIndex idx{tree.ell0};
      idx.insert(idx.end(), tail.begin(), tail.end());
      out.push_back(std::move(idx));
    }
  return out;
}

DescentIndex largest_index(const DescentNode& tree) {
  if (tree.children.empty()) return {};
  DescentIndex best;
  bool first = true;
  for (const auto& c : tree.children) {
    DescentIndex tail = largest_index(c);
    if (first || tail > best) best = std::move(tail);
    first = false;
  }
  best.insert(best.begin(), tree.ell0);
  return best;
}

DescentIndex largest_index(const Representation& rep) {
  DescentStep st = descend(rep);
  if (st.components.empty()) return {};
  DescentIndex best;
  bool first = true;
  for (const auto& c : st.components) {
    DescentIndex tail = largest_index(c);
    if (first || tail > best) best = std::move(tail);
    first = false;
  }
  best.insert(best.begin(), st.ell0);
  return best;
}

Partition tilde_partition(const DescentIndex& idx) {
  const int r = static_cast<int>(idx.size());
  Partition out;
  for (int i = 0; i < r; ++i) {
    const long prev = i > 0 ? idx[i - 1] : std::numeric_limits<long>::max();
    const long next = i + 1 < r ? idx[i + 1] : 0;
    const long li = idx[i];
    const bool c1 = prev >= li && li >= next;
    const bool c2 = li == next - 1 && prev > li;
    const bool c3 = li == prev + 1 && next < li;
    if (int(c1) + int(c2) + int(c3) != 1) {
      std::string s;
      for (int v : idx) s += (s.empty() ? "" : ",") + std::to_string(v);
      fail(ErrorCode::CaseGap, "index (" + s + ") fits no case at position " + std::to_string(i + 1));
    }
    out.push_back(static_cast<int>(c1 ? 2 * li : c2 ? 2 * li + 1 : 2 * li - 1));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  if (!is_partition(out)) fail(ErrorCode::NotAPartition, "tilde partition " + to_text(out) + " is not a partition");
  return out;
}

Partition doubled(const DescentIndex& idx) {
  Partition out;
  for (int v : idx)
    if (v) out.push_back(2 * v);
  return out;
}

}  // namespace sympdesc
