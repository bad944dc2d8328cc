#pragma once

#include <optional>
#include <vector>

#include "qutrit/mcs.hpp"

namespace qutrit {

struct StructureCounts {
  int s = 0;
  int b = 0;
  int sb = 0;
  int g = 0;

  int total() const { return s + b + sb + g; }
  bool operator==(const StructureCounts&) const = default;
};

std::string to_string(const StructureCounts& c);

// 3^n + 1 pairwise-disjoint maximally commuting subsets covering every
// canonical nonidentity operator exactly once.
struct Partition {
  int n = 0;
  std::vector<Mcs> mcs_list;  // sorted by subspace key
  StructureCounts structure;
};

// Disjointness and coverage recomputed from the raw member sets; throws
// theorem_violation on any defect.
void validate_partition(const Partition& p);

StructureCounts structure_counts(const Partition& p);

// Complete duplicate-free partition list for n = 1 or 2, sorted by the
// subspace keys of their subsets. Counts: 1 and 48.
std::vector<Partition> enumerate_partitions(int n);

// Admissibility of a three-qutrit structure against the operator budgets:
// the per-class body profiles must exactly consume the 24/192/512 one-, two-
// and three-body operators across 28 subsets. `admissible` lists every
// nonnegative solution of the budget equations (re-derived, not hardcoded).
struct CoexistenceReport {
  bool pass = false;
  std::vector<StructureCounts> admissible;
  std::string detail;
};
CoexistenceReport verify_coexistence(const StructureCounts& s);

// Result of the n=3 witness search. `exhausted` means every admissible seed
// choice was searched to completion without finding a cover.
struct WitnessSearch {
  std::optional<Partition> partition;
  long seeds_tried = 0;
  bool exhausted = false;
};

// Searches for a 28-subset exact cover with exactly ns_target separable
// subsets (0..4). Separable seeds are fixed first, then the remainder is
// covered from the non-separable catalog, so the separable count is exact by
// construction. The returned partition is validated and its structure is
// checked against the coexistence relations. Deterministic for any thread
// count: the witness from the smallest successful seed wins.
WitnessSearch find_partition_with_structure(int ns_target, int threads = 1);

}  // namespace qutrit
