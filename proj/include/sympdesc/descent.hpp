// SPDX-License-Identifier: MIT
#pragma once

#include <utility>
#include <vector>

#include "sympdesc/orbits.hpp"
#include "sympdesc/reps.hpp"
#include "sympdesc/symbols.hpp"

namespace sympdesc {

// Unscaled descent indices (l_1, l_2, ...); the doubled form is (2l_1, ...).
using DescentIndex = std::vector<int>;

// DG operators on an odd-defect symbol.
Symbol dg_un(const Symbol& s, Sign sign);

// The operator applied to one fixed member of a theta class.
Symbol dg_theta_member(const Symbol& s, Sign sign);

// DG operator on a theta class: the first member (representative, then its
// transpose) whose image has defect = 1 (mod 4).
Symbol dg_theta(const Symbol& s, Sign sign);

// The two boundary values whose maximum is the first occurrence index of a
// unipotent or theta symbol. They coincide exactly at branching nodes.
std::pair<int, int> boundary_values(const Symbol& s);

int first_index(const Symbol& s);
int first_index(const Representation& rep);

struct DescentStep {
  int ell0 = 0;
  std::vector<Representation> components;
};

// One Fourier-Jacobi step. Rank 0 representations yield no components.
DescentStep descend(const Representation& rep);

struct DescentNode {
  Representation rep;
  int ell0 = 0;
  std::vector<DescentNode> children;
};

DescentNode descent_tree(const Representation& rep);

// Every root-to-leaf index sequence, in tree order.
std::vector<DescentIndex> all_indices(const DescentNode& tree);

// Lexicographically largest root-to-leaf sequence.
DescentIndex largest_index(const DescentNode& tree);

// Largest index computed without materializing the tree.
DescentIndex largest_index(const Representation& rep);

// Parity-corrected partition of a unipotent/theta largest index.
// Throws CaseGap when a position fits none of the three cases.
Partition tilde_partition(const DescentIndex& idx);

// (2l_1, 2l_2, ...), zeros dropped.
Partition doubled(const DescentIndex& idx);

}  // namespace sympdesc
