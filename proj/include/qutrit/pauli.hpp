#pragma once

#include <string>
#include <string_view>

#include "qutrit/cyclotomic.hpp"
#include "qutrit/trit.hpp"

namespace qutrit {

// One element of the N-qutrit Pauli group: w^phase * prod_i X_i^{x_i} Z_i^{z_i},
// with X written left of Z in every slot (so Y = XZ and V = XZ^2 hold on the
// nose). The canonical representative of a basis operator has phase = 0.
struct PauliOp {
  int n = 0;
  Trit phase = 0;
  TritVec x;
  TritVec z;

  bool is_identity_vec() const { return x.is_zero() && z.is_zero(); }
  bool is_canonical() const { return phase == 0; }

  PauliOp canonical() const {
    PauliOp r = *this;
    r.phase = 0;
    return r;
  }

  bool operator==(const PauliOp& o) const {
    return n == o.n && phase == o.phase && x == o.x && z == o.z;
  }
  bool operator!=(const PauliOp& o) const { return !(*this == o); }
};

PauliOp identity_op(int n);

// Same basis operator, i.e. equal after phase stripping.
inline bool same_basis_op(const PauliOp& a, const PauliOp& b) {
  return a.n == b.n && a.x == b.x && a.z == b.z;
}

// Total order on the exponent vectors: slot 0 weighs most, slot key is
// x_i*3 + z_i. Phase is compared last. Used for canonical member sorting.
bool op_less(const PauliOp& a, const PauliOp& b);

// Integer code of the exponent vector in [0, 9^n); 0 is the identity.
// Inverse of op_from_code. Slot 0 is the most significant digit, so integer
// order on codes agrees with op_less on canonical ops.
int op_code(const PauliOp& a);
PauliOp op_from_code(int n, int code);

// Grammar: optional phase prefix w0|w1|w2, then exactly n tokens from
// {I,Z,X,Y,V}, each optionally suffixed by 2 (exponent doubling mod 3).
PauliOp parse_op(std::string_view text, int n);
std::string format_op(const PauliOp& a);

// Exact group product with accumulated phase: per slot,
// (X^x Z^z)(X^x' Z^z') = w^(z*x') X^(x+x') Z^(z+z'), phases add mod 3.
PauliOp multiply(const PauliOp& a, const PauliOp& b);

// Group inverse; equals the conjugate transpose of to_matrix(a).
PauliOp dagger(const PauliOp& a);

// t such that a*b = w^t b*a: sum_i (z_i x'_i - x_i z'_i) mod 3.
Trit symplectic_form(const PauliOp& a, const PauliOp& b);

inline bool commutes(const PauliOp& a, const PauliOp& b) {
  return symplectic_form(a, b) == 0;
}

// Number of slots with a non-identity factor.
int body_count(const PauliOp& a);

// Exact 3^n x 3^n matrix over Q(w): w^phase times the tensor product of the
// per-slot factors X^x Z^z (entry at row n+x, column n equals w^(n z)).
// Guarded to n <= 6.
CycMatrix to_matrix(const PauliOp& a);

}  // namespace qutrit
