// SPDX-License-Identifier: MIT
#pragma once

#include <compare>
#include <vector>

#include "sympdesc/partitions.hpp"

namespace sympdesc {

// Square class of a discriminant.
enum class Sign { Plus, Minus };

inline Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::Plus : Sign::Minus;
}
inline char sign_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

// Partition of 2n whose odd parts have even multiplicity.
struct SymplecticPartition {
  Partition parts;
  int n() const noexcept { return size(parts) / 2; }
  auto operator<=>(const SymplecticPartition&) const = default;
};

bool is_symplectic(const Partition& p) noexcept;

// Throws OddTotal or OddMultiplicity.
SymplecticPartition validate_shape(const Partition& p);

std::vector<SymplecticPartition> enumerate_stable(int n);

struct PartSign {
  int part;
  Sign sign;
  auto operator<=>(const PartSign&) const = default;
};

// One sign per distinct even part, ordered by decreasing part.
struct RationalOrbit {
  SymplecticPartition shape;
  std::vector<PartSign> signs;
  auto operator<=>(const RationalOrbit&) const = default;
};

// One sign per even part occurrence, in part order.
struct LayeredOrbit {
  Partition shape;
  std::vector<Sign> layered;
  auto operator<=>(const LayeredOrbit&) const = default;
};

// Number of even parts counted with multiplicity.
int even_part_count(const Partition& p) noexcept;

std::vector<RationalOrbit> enumerate_rational(int n);

// Scales the form by a: flips the sign of each even part of odd multiplicity.
RationalOrbit scale(const RationalOrbit& o, Sign a);

// Folds per-occurrence signs into one discriminant class per part value,
// with the (-1)^{k(k-1)/2} normalization. Throws LengthMismatch.
RationalOrbit fold_signs(const Partition& shape, const std::vector<Sign>& layered);

// Prepends the even part `part` with sign eps. Throws NotDominant when the
// part is smaller than the largest part of rest, InvalidArgument when odd.
LayeredOrbit compose(int part, Sign eps, const LayeredOrbit& rest);

// Closure order on orbits; throws SizeMismatch.
bool closure_leq(const SymplecticPartition& a, const SymplecticPartition& b);

}  // namespace sympdesc
