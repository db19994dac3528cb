// SPDX-License-Identifier: MIT
#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "sympdesc/partitions.hpp"

namespace sympdesc {

// Two strictly decreasing rows of naturals. Values produced by this library
// are normalized (see normalize); equality is equality of normal forms.
struct Symbol {
  std::vector<int> top;
  std::vector<int> bottom;
  auto operator<=>(const Symbol&) const = default;
};

bool is_valid_symbol(const Symbol& s) noexcept;

// Validates the rows and returns the normal form. Throws InvalidArgument.
Symbol make_symbol(std::vector<int> top, std::vector<int> bottom);

int rank(const Symbol& s) noexcept;
int defect(const Symbol& s) noexcept;

// Swaps the rows.
Symbol transpose(const Symbol& s);

// Applies the equivalence shift (a+1, ..., 0 ; b+1, ..., 0) `times` times.
Symbol shift(const Symbol& s, int times = 1);

// Undoes the shift while both rows end in 0.
Symbol normalize(Symbol s);

// Defect 0 or 1 with a1 >= b1 >= a2 >= b2 >= ...
bool is_special(const Symbol& s) noexcept;

// Defect 0 with identical rows. Both descent signs reach the same child.
bool is_degenerate(const Symbol& s) noexcept;

// Subtracts the row staircases and drops zeros.
BiPartition upsilon(const Symbol& s);

// Staircase-subtracted rows keeping zeros, one entry per row entry.
std::pair<std::vector<int>, std::vector<int>> upsilon_padded(const Symbol& s);

// The normalized symbol of defect `def` with the minimal row lengths whose
// upsilon is b.
Symbol upsilon_inverse(const BiPartition& b, int def);

// Rank of the pure staircase symbol of the given defect.
int staircase_correction(int def) noexcept;

// Special symbol with the same entry multiset, entries dealt alternately.
// Throws NoSpecialArrangement when some value occurs three or more times.
Symbol special_closure(const Symbol& s);

// All normalized symbols of the given rank and defect, ordered by upsilon.
std::vector<Symbol> enumerate_symbols(int rank, int def);

// A symbol up to transpose; the representative has def > 0, or def = 0 and
// is the lexicographically smaller member.
struct SymbolClass {
  Symbol representative;
  auto operator<=>(const SymbolClass&) const = default;
};

SymbolClass symbol_class(const Symbol& s);

// "a1,a2,...;b1,b2,..."
std::string to_text(const Symbol& s);
Symbol parse_symbol(std::string_view text);

}  // namespace sympdesc
