#pragma once

// Shared test fixtures and the independent matrix oracle. The oracle builds
// operator matrices by explicit matrix products of the defining Z and X
// matrices (Z = diag(1,w,w^2), X: |c> -> |c+1>), never through
// qutrit::to_matrix, so the two routes check each other.

#include <string>
#include <vector>

#include "qutrit/cyclotomic.hpp"
#include "qutrit/pauli.hpp"

namespace testsupport {

inline qutrit::CycMatrix oracle_z() {
  qutrit::CycMatrix m(3, 3);
  for (int c = 0; c < 3; ++c) m.at(c, c) = qutrit::CycNum::omega_pow(c);
  return m;
}

inline qutrit::CycMatrix oracle_x() {
  qutrit::CycMatrix m(3, 3);
  for (int c = 0; c < 3; ++c) m.at((c + 1) % 3, c) = qutrit::CycNum(1);
  return m;
}

// Canonical representative by repeated matrix multiplication, X left of Z.
inline qutrit::CycMatrix oracle_matrix(const qutrit::PauliOp& op) {
  qutrit::CycMatrix m = qutrit::CycMatrix::identity(1);
  for (int i = 0; i < op.n; ++i) {
    qutrit::CycMatrix f = qutrit::CycMatrix::identity(3);
    for (int k = 0; k < op.x.get(i); ++k) f = f * oracle_x();
    for (int k = 0; k < op.z.get(i); ++k) f = f * oracle_z();
    m = m.kron(f);
  }
  return m.scaled(qutrit::CycNum::omega_pow(op.phase));
}

// All 27 one-qutrit group elements (9 exponent vectors x 3 phases).
inline std::vector<qutrit::PauliOp> one_qutrit_group() {
  std::vector<qutrit::PauliOp> ops;
  for (int code = 0; code < 9; ++code)
    for (qutrit::Trit p = 0; p < 3; ++p) {
      qutrit::PauliOp op = qutrit::op_from_code(1, code);
      op.phase = p;
      ops.push_back(op);
    }
  return ops;
}

// The ten 8-member rows of the reference two-qutrit partition.
inline std::vector<std::vector<std::string>> reference_partition_rows() {
  return {
      {"IZ", "IZ2", "ZI", "ZZ", "ZZ2", "Z2I", "Z2Z", "Z2Z2"},
      {"IX", "IX2", "XI", "XX", "XX2", "X2I", "X2X", "X2X2"},
      {"IY", "IY2", "YI", "YY", "YY2", "Y2I", "Y2Y", "Y2Y2"},
      {"IV", "IV2", "VI", "VV", "VV2", "V2I", "V2V", "V2V2"},
      {"ZX", "Z2X2", "VZ", "XY", "YV2", "V2Z2", "Y2V", "X2Y2"},
      {"ZY", "Z2Y2", "XZ", "YV", "VX2", "X2Z2", "V2X", "Y2V2"},
      {"ZV", "Z2V2", "YZ", "VX", "XY2", "Y2Z2", "X2Y", "V2X2"},
      {"Z2X", "ZX2", "YZ2", "XV", "VY2", "Y2Z", "V2Y", "X2V2"},
      {"Z2Y", "ZY2", "VZ2", "YX", "XV2", "V2Z", "X2V", "Y2X2"},
      {"Z2V", "ZV2", "XZ2", "VY", "YX2", "X2Z", "Y2X", "V2Y2"},
  };
}

// The thirteen listed operators of the reference three-qutrit GHZ-type
// commuting subset; together with their squares they make the full 26.
inline std::vector<std::string> ghz_mcs_half() {
  return {"XXX", "YYY", "VVV", "XYV", "YVX", "VXY", "XVY",
          "YXV", "VYX", "Z2ZI", "Z2IZ", "IZ2Z", "ZZZ"};
}

}  // namespace testsupport
