#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qutrit/pauli.hpp"

namespace qutrit {

// Raised when a computation contradicts a structural fact the library
// verifies mechanically (e.g. a commuting subset whose body profile matches
// no known class).
struct theorem_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Basis/MCS entanglement type. Codes: S, B, SB, G.
enum class EntanglementClass { separable, bell, partially_entangled, ghz };

const char* class_code(EntanglementClass c);
EntanglementClass class_from_code(std::string_view code);

// A maximally commuting subset: the 3^n - 1 canonical nonidentity operators
// of a maximal isotropic subspace of the symplectic trit-space, with n
// independent generators. Identity of the subset is its sorted member-code
// list, independent of the generators used to build it.
struct Mcs {
  int n = 0;
  std::vector<PauliOp> generators;
  std::vector<PauliOp> members;     // sorted by op_less
  std::vector<int> member_codes;    // sorted op codes; the subspace key
  EntanglementClass cls = EntanglementClass::separable;
  std::vector<int> profile;         // member counts by body number 1..n

  bool contains(const PauliOp& a) const;
  bool disjoint_from(const Mcs& o) const;
};

// Closure of n independent, pairwise-commuting canonical generators.
// Throws std::invalid_argument naming the offending pair (with its
// symplectic form) or reporting dependence.
Mcs span(const std::vector<PauliOp>& generators);

// All maximal isotropic subspaces for n in 1..3, each exactly once, sorted
// by subspace key. Counts are 4, 40, 1120.
std::vector<Mcs> enumerate_all_mcs(int n);

// Class from the body profile alone. Throws theorem_violation if the profile
// matches no known class.
EntanglementClass classify_profile(int n, const std::vector<int>& profile);

// All enumerated MCS's whose member set includes a (phase ignored).
// Throws std::invalid_argument on the identity.
std::vector<Mcs> mcs_containing(const PauliOp& a);

}  // namespace qutrit
