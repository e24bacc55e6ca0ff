#pragma once

// Brute-force generators for constrained set partitions and permutations.
// These are the ground truth the recurrences are tested against, so they
// share no code with the triangle engine.

#include "rbell/exact.hpp"
#include "rbell/family.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace rbell {

class budget_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr int kPartitionBudget = 14;
inline constexpr int kPermutationBudget = 10;

/// Blocks of labels 1..n, each sorted, ordered by increasing minimum.
struct PartitionObject {
  std::vector<std::vector<int>> blocks;
  friend bool operator==(const PartitionObject&, const PartitionObject&) = default;
  friend auto operator<=>(const PartitionObject&, const PartitionObject&) = default;
};

/// Cycles of labels 1..n; each cycle starts at its minimum and cycles are
/// ordered by minimum.
struct PermutationCycles {
  std::vector<std::vector<int>> cycles;
  friend bool operator==(const PermutationCycles&, const PermutationCycles&) = default;
  friend auto operator<=>(const PermutationCycles&, const PermutationCycles&) = default;
};

/// Visits every partition of [n] whose blocks satisfy `c`, exactly once,
/// in canonical form and restricted-growth-string order.
void iterate_partitions(int n, Constraint c,
                        const std::function<void(const PartitionObject&)>& visit);

std::vector<PartitionObject> list_partitions(int n, Constraint c);

/// Visits every permutation of [n] whose cycles satisfy `c`.
void iterate_cycle_perms(int n, Constraint c,
                         const std::function<void(const PermutationCycles&)>& visit);

std::vector<PermutationCycles> list_cycle_perms(int n, Constraint c);

/// Number of admissible partitions; restricted to exactly k blocks if given.
Nat count_partitions(int n, Constraint c, std::optional<int> k = std::nullopt);

/// Number of admissible permutations; restricted to exactly k cycles if given.
Nat count_cycle_perms(int n, Constraint c, std::optional<int> k = std::nullopt);

/// counts[k] = number of admissible partitions with k blocks, k = 0..n.
std::vector<Nat> partition_histogram(int n, Constraint c);

/// counts[k] = number of admissible permutations with k cycles, k = 0..n.
std::vector<Nat> cycle_perm_histogram(int n, Constraint c);

}  // namespace rbell
