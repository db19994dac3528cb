// SPDX-License-Identifier: MIT
#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace sympdesc {

// Weakly decreasing positive integers; the empty vector is the partition of 0.
using Partition = std::vector<int>;

struct BiPartition {
  Partition top;
  Partition bottom;
  auto operator<=>(const BiPartition&) const = default;
};

bool is_partition(const Partition& p) noexcept;

// Sorts descending and drops zeros. Throws InvalidArgument on negatives.
Partition make_partition(std::vector<int> values);

int size(const Partition& p) noexcept;
int size(const BiPartition& b) noexcept;

// i-th part, 1-based; 0 past the end.
int part(const Partition& p, int i) noexcept;

Partition transpose(const Partition& p);

// (lambda^t)_i, 1-based, without building the transpose.
int transpose_part(const Partition& p, int i) noexcept;

// Removes the first j columns of the Young diagram.
Partition remove_columns(const Partition& p, int j);

// mu_i - 1 <= lambda_i <= mu_i for every i, shorter side padded with zeros.
bool precede(const Partition& lambda, const Partition& mu) noexcept;

// Split of lambda* = (lambda_i + k - i) into odd and even entries.
BiPartition psi_split(const Partition& lambda);

// Same as psi_split but keeps the zero entries, so that
// psi_merge(psi_split_padded(l)) == l.
std::pair<std::vector<int>, std::vector<int>> psi_split_padded(const Partition& lambda);

// Inverse of psi_split. eta and zeta are weakly decreasing, nonnegative and
// may carry explicit trailing zeros; their lengths fix the staircases.
// Throws NotInvertible when no partition has this image.
Partition psi_merge(const std::vector<int>& eta, const std::vector<int>& zeta);

// Partial-sum order. Throws SizeMismatch when the totals differ.
bool dominance_leq(const Partition& lambda, const Partition& mu);

// a * lambda, every part multiplied by a (a >= 0).
Partition scale_parts(const Partition& p, int a);

// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

// All partitions of n with parts <= max_part.
std::vector<Partition> partitions_of(int n, int max_part);

// All bipartitions of n ordered lexicographically by (top, bottom).
std::vector<BiPartition> bipartitions_of(int n);

// Comma-separated text; the empty string is the empty partition.
std::string to_text(const Partition& p);
Partition parse_partition(std::string_view text);

}  // namespace sympdesc
