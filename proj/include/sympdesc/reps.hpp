// SPDX-License-Identifier: MIT
#pragma once

#include <compare>
#include <variant>
#include <vector>

#include "sympdesc/partitions.hpp"
#include "sympdesc/symbols.hpp"

namespace sympdesc {

// Unipotent representation; the symbol has defect = 1 (mod 4).
struct UnipotentRep {
  Symbol symbol;
  auto operator<=>(const UnipotentRep&) const = default;
};

// Theta representation, known only up to transposing its symbol.
struct ThetaRep {
  SymbolClass symbol_class;
  auto operator<=>(const ThetaRep&) const = default;
};

// One eigenvalue class [a] away from +-1: its degree #[a], its unipotent
// label and the index of the entry for [-a] (possibly itself).
struct CaseAEntry {
  int degree = 1;
  Partition partition;
  int partner = 0;
  auto operator<=>(const CaseAEntry&) const = default;
};

struct CaseARep {
  std::vector<CaseAEntry> entries;
  auto operator<=>(const CaseARep&) const = default;
};

// A representation with all three components; any may be trivial.
struct GeneralRep {
  CaseARep case_a;
  Symbol unipotent{{0}, {}};
  SymbolClass theta{};
};

using Representation = std::variant<UnipotentRep, ThetaRep, CaseARep>;

// Throws InvalidArgument unless defect = 1 (mod 4).
UnipotentRep make_unipotent(const Symbol& s);

// Throws InvalidArgument unless the defect is even.
ThetaRep make_theta(const Symbol& s);

// Throws InvalidArgument on bad degrees, partitions or pairing.
CaseARep make_case_a(std::vector<CaseAEntry> entries);

// Odd defect: the unipotent representation, transposing a defect = 3 (mod 4)
// symbol first. Even defect: its theta class.
Representation rep_from_symbol(const Symbol& s);

bool is_theta_rep(const Symbol& s) noexcept;

int rank(const CaseARep& r) noexcept;
int rank(const GeneralRep& r) noexcept;
int rank(const Representation& r) noexcept;

// Membership of (lambda, lambda') in the union of the four G-sets.
bool in_G(const Symbol& lambda, const Symbol& lambda_prime);

// 1 iff some member of the theta class pairs with u through in_G.
int multiplicity_unip_theta(const UnipotentRep& u, const ThetaRep& t);

// 1 iff pi' is the column-removal descent of pi at the partner classes.
// Throws RankMismatch when the entry lists do not share degrees and pairing.
int multiplicity_caseA_first_occurrence(const CaseARep& pi, const CaseARep& pi_prime);

// Conjunction of the Case A factor and the two symbol-pair factors.
int multiplicity_general(const GeneralRep& pi, const GeneralRep& pi_prime);

// Unipotent cuspidal of Sp_{2k(k+1)}: the staircase (2k, ..., 0 ; -) for even
// k and its transpose for odd k, so the defect is 1 (mod 4).
UnipotentRep unipotent_cuspidal(int k);

// True when the symbol is a pure staircase of positive rank in one row.
bool is_cuspidal_symbol(const Symbol& s) noexcept;

}  // namespace sympdesc
