// SPDX-License-Identifier: MIT
#include "sympdesc/wavefront.hpp"

#include <optional>
#include <set>

#include "sympdesc/errors.hpp"

namespace sympdesc {

namespace {

using LayeredSet = std::set<LayeredOrbit>;

// Signs of the characters driving a step from this node.
std::vector<Sign> admissible_signs(const Representation& rep) {
  if (std::holds_alternative<ThetaRep>(rep)) return {Sign::Minus};
  return {Sign::Plus, Sign::Minus};
}

LayeredSet extend(const Representation& rep, int ell0, const LayeredSet& tails) {
  if (ell0 == 0) return tails;
  LayeredSet out;
  for (Sign eps : admissible_signs(rep))
    for (const auto& t : tails) out.insert(compose(2 * ell0, eps, t));
  return out;
}

// Supports along irreducible paths whose index sequence equals target.
std::optional<LayeredSet> irreducible_supports(const Representation& rep, const DescentIndex& target,
                                               std::size_t pos) {
  const DescentStep st = descend(rep);
  if (st.components.empty()) {
    if (pos != target.size()) return std::nullopt;
    return LayeredSet{LayeredOrbit{}};
  }
  if (pos >= target.size() || st.ell0 != target[pos] || st.components.size() != 1) return std::nullopt;
  auto tails = irreducible_supports(st.components.front(), target, pos + 1);
  if (!tails) return std::nullopt;
  return extend(rep, st.ell0, *tails);
}

std::vector<SupportOrbit> fold_all(const LayeredSet& set) {
  std::vector<SupportOrbit> out;
  for (const auto& l : set) out.push_back({l, fold_signs(l.shape, l.layered)});
  return out;
}

const Symbol* symbol_ptr(const Representation& rep) {
  if (auto* u = std::get_if<UnipotentRep>(&rep)) return &u->symbol;
  if (auto* t = std::get_if<ThetaRep>(&rep)) return &t->symbol_class.representative;
  return nullptr;
}

void collect_paths(const Representation& rep, std::vector<Representation>& prefix,
                   std::vector<std::vector<Representation>>& out) {
  prefix.push_back(rep);
  const DescentStep st = descend(rep);
  if (st.components.empty()) out.push_back(prefix);
  for (const auto& c : st.components) collect_paths(c, prefix, out);
  prefix.pop_back();
}

}  // namespace

const char* route_name(Route r) noexcept {
  return r == Route::Descent ? "DESCENT" : "UNIPOTENT_SUPPORT";
}

Partition unipotent_support_partition(const Symbol& s) {
  const Symbol z = special_closure(s);
  auto [eta, zeta] = upsilon_padded(z);
  const std::size_t len = std::max(eta.size(), zeta.size());
  eta.resize(len, 0);
  zeta.resize(len, 0);
  if (defect(s) % 2) return psi_merge(eta, zeta);
  return psi_merge(zeta, eta);
}

SymplecticPartition wavefront_support_route(const Symbol& s) {
  const Partition p = transpose(unipotent_support_partition(s));
  if (!is_symplectic(p) || size(p) != 2 * rank(s))
    fail(ErrorCode::InvalidShape, "support route gives " + to_text(p) + " for " + to_text(s));
  return {p};
}

SymplecticPartition wavefront_descent_route(const Representation& rep) {
  const DescentIndex idx = largest_index(rep);
  const Symbol* s = symbol_ptr(rep);
  Partition p;
  if (!s || is_cuspidal_symbol(*s)) {
    p = doubled(idx);
    if (!is_partition(p)) fail(ErrorCode::NotAPartition, "doubled largest index " + to_text(p) + " is not monotone");
  } else {
    p = tilde_partition(idx);
  }
  if (!is_symplectic(p) || size(p) != 2 * rank(rep))
    fail(ErrorCode::InvalidShape, "descent route gives " + to_text(p));
  return {p};
}

Consistency check_consistency(const Symbol& s) {
  const Representation rep = rep_from_symbol(s);
  Consistency c;
  c.descent = wavefront_descent_route(rep).parts;
  c.support = wavefront_support_route(s).parts;
  c.agree = c.descent == c.support;
  return c;
}

std::vector<SupportOrbit> supporting_orbits(const Representation& rep) {
  const DescentIndex target = largest_index(rep);
  auto set = irreducible_supports(rep, target, 0);
  if (!set) {
    std::string what = "largest descent branches";
    if (const Symbol* s = symbol_ptr(rep)) what += " for " + to_text(*s);
    fail(ErrorCode::Branching, what);
  }
  return fold_all(*set);
}

std::vector<BranchSupports> supporting_orbits_per_branch(const Representation& rep) {
  const DescentIndex target = largest_index(rep);
  std::vector<std::vector<Representation>> paths;
  std::vector<Representation> prefix;
  collect_paths(rep, prefix, paths);
  std::vector<BranchSupports> out;
  for (const auto& path : paths) {
    BranchSupports b;
    LayeredSet set{LayeredOrbit{}};
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      const DescentStep st = descend(*it);
      if (st.components.empty()) continue;
      b.path.insert(b.path.begin(), st.ell0);
    }
    if (b.path != target) continue;
    try {
      for (std::size_t i = path.size(); i-- > 0;) {
        const int ell0 = i < b.path.size() ? b.path[i] : 0;
        if (i < b.path.size()) set = extend(path[i], ell0, set);
      }
      b.supports = fold_all(set);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotDominant) throw;
      b.dominant = false;
    }
    out.push_back(std::move(b));
  }
  return out;
}

WavefrontResult wavefront(const Representation& rep, Route route) {
  WavefrontResult w;
  w.route = route;
  if (route == Route::Descent) {
    w.stable = wavefront_descent_route(rep);
  } else {
    const Symbol* s = symbol_ptr(rep);
    if (!s) fail(ErrorCode::InvalidArgument, "the support route applies to unipotent and theta symbols");
    w.stable = wavefront_support_route(*s);
  }
  w.multiplicity_claim = std::holds_alternative<CaseARep>(rep) ? "=1" : "<=1";
  try {
    w.supports = supporting_orbits(rep);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Branching) throw;
    w.branching = true;
    w.branches = supporting_orbits_per_branch(rep);
  }
  return w;
}

}  // namespace sympdesc
