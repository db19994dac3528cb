// SPDX-License-Identifier: MIT
#include "sympdesc/orbits.hpp"

#include <map>

#include "sympdesc/errors.hpp"

namespace sympdesc {

namespace {

// Part value -> multiplicity, decreasing part order.
std::map<int, int, std::greater<>> multiplicities(const Partition& p) {
  std::map<int, int, std::greater<>> m;
  for (int x : p) ++m[x];
  return m;
}

}  // namespace

bool is_symplectic(const Partition& p) noexcept {
  if (!is_partition(p) || size(p) % 2) return false;
  for (auto [v, k] : multiplicities(p))
    if (v % 2 && k % 2) return false;
  return true;
}

SymplecticPartition validate_shape(const Partition& p) {
  if (!is_partition(p)) fail(ErrorCode::NotAPartition, "not a partition: " + to_text(p));
  if (size(p) % 2) fail(ErrorCode::OddTotal, "odd total: " + to_text(p));
  for (auto [v, k] : multiplicities(p))
    if (v % 2 && k % 2)
      fail(ErrorCode::OddMultiplicity,
           "odd part " + std::to_string(v) + " has odd multiplicity in " + to_text(p));
  return {p};
}

std::vector<SymplecticPartition> enumerate_stable(int n) {
  std::vector<SymplecticPartition> out;
  for (auto& p : partitions_of(2 * n))
    if (is_symplectic(p)) out.push_back({std::move(p)});
  return out;
}

int even_part_count(const Partition& p) noexcept {
  int c = 0;
  for (int x : p)
    if (x % 2 == 0) ++c;
  return c;
}

std::vector<RationalOrbit> enumerate_rational(int n) {
  std::vector<RationalOrbit> out;
  for (const auto& shape : enumerate_stable(n)) {
    std::vector<int> evens;
    for (auto [v, k] : multiplicities(shape.parts))
      if (v % 2 == 0) evens.push_back(v);
    const unsigned count = 1u << evens.size();
    for (unsigned mask = 0; mask < count; ++mask) {
      RationalOrbit o{shape, {}};
      for (std::size_t i = 0; i < evens.size(); ++i) {
        const bool minus = (mask >> (evens.size() - 1 - i)) & 1u;
        o.signs.push_back({evens[i], minus ? Sign::Minus : Sign::Plus});
      }
      out.push_back(std::move(o));
    }
  }
  return out;
}

RationalOrbit scale(const RationalOrbit& o, Sign a) {
  RationalOrbit r = o;
  if (a == Sign::Plus) return r;
  const auto mult = multiplicities(o.shape.parts);
  for (auto& ps : r.signs)
    if (mult.at(ps.part) % 2) ps.sign = ps.sign * Sign::Minus;
  return r;
}

RationalOrbit fold_signs(const Partition& shape, const std::vector<Sign>& layered) {
  const SymplecticPartition sp = validate_shape(shape);
  if (static_cast<int>(layered.size()) != even_part_count(shape))
    fail(ErrorCode::LengthMismatch, "layered signs do not match the even parts of " + to_text(shape));
  RationalOrbit o{sp, {}};
  std::size_t pos = 0;
  for (auto [v, k] : multiplicities(shape)) {
    if (v % 2) continue;
    Sign s = ((k * (k - 1) / 2) % 2) ? Sign::Minus : Sign::Plus;
    for (int i = 0; i < k; ++i) s = s * layered[pos++];
    o.signs.push_back({v, s});
  }
  return o;
}

LayeredOrbit compose(int new_part, Sign eps, const LayeredOrbit& rest) {
  if (new_part <= 0 || new_part % 2)
    fail(ErrorCode::InvalidArgument, "compose needs a positive even part");
  if (static_cast<int>(rest.layered.size()) != even_part_count(rest.shape))
    fail(ErrorCode::LengthMismatch, "layered signs do not match the even parts of " + to_text(rest.shape));
  const int largest = rest.shape.empty() ? 0 : rest.shape.front();
  if (new_part < largest)
    fail(ErrorCode::NotDominant, std::to_string(new_part) + " is smaller than " + std::to_string(largest));
  LayeredOrbit r;
  r.shape.push_back(new_part);
  r.shape.insert(r.shape.end(), rest.shape.begin(), rest.shape.end());
  Sign lead = eps;
  if (new_part == largest) {
    int equal = 0;
    for (int x : rest.shape)
      if (x == new_part) ++equal;
    if (equal % 2) lead = lead * Sign::Minus;
  }
  r.layered.push_back(lead);
  for (Sign q : rest.layered) r.layered.push_back(eps * q);
  return r;
}

bool closure_leq(const SymplecticPartition& a, const SymplecticPartition& b) {
  return dominance_leq(a.parts, b.parts);
}

}  // namespace sympdesc
