// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "sympdesc/descent.hpp"
#include "sympdesc/orbits.hpp"
#include "sympdesc/reps.hpp"

namespace sympdesc {

enum class Route { Descent, UnipotentSupport };

const char* route_name(Route r) noexcept;

// Special closure, padded upsilon and psi inverse. Even-defect symbols merge
// the two components in swapped order.
Partition unipotent_support_partition(const Symbol& s);

// Transpose of the unipotent support. Throws InvalidShape on parity failure.
SymplecticPartition wavefront_support_route(const Symbol& s);

// Case A and cuspidal: doubled largest index. Other symbols: tilde partition.
SymplecticPartition wavefront_descent_route(const Representation& rep);

struct Consistency {
  bool agree = false;
  Partition descent;
  Partition support;
};

Consistency check_consistency(const Symbol& s);

struct SupportOrbit {
  LayeredOrbit layered;
  RationalOrbit folded;
};

// Supporting rational orbits built along an irreducible largest descent.
// Throws Branching when no largest descent path is irreducible.
std::vector<SupportOrbit> supporting_orbits(const Representation& rep);

struct BranchSupports {
  DescentIndex path;
  // False when the path increases, so the parts cannot be stacked.
  bool dominant = true;
  std::vector<SupportOrbit> supports;
};

// Supports built along every largest root-to-leaf path regardless of
// branching. Shapes follow the doubled path.
std::vector<BranchSupports> supporting_orbits_per_branch(const Representation& rep);

struct WavefrontResult {
  SymplecticPartition stable;
  Route route = Route::Descent;
  bool branching = false;
  std::vector<SupportOrbit> supports;
  // Filled instead of supports when branching.
  std::vector<BranchSupports> branches;
  // "=1" for Case A, "<=1" otherwise.
  std::string multiplicity_claim;
};

WavefrontResult wavefront(const Representation& rep, Route route);

}  // namespace sympdesc
