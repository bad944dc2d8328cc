#include <random>

#include "doctest.h"
#include "qutrit/cyclotomic.hpp"
#include "qutrit/pauli.hpp"
#include "test_support.hpp"

using namespace qutrit;

namespace {

CycNum random_cyc(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  return CycNum(rational(num(rng), den(rng)), rational(num(rng), den(rng)));
}

}  // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("rational helpers canonicalize and round-trip") {
  CHECK(to_string(rational(2, 4)) == "1/2");
  CHECK(to_string(rational(-3, 9)) == "-1/3");
  CHECK(to_string(rational(5)) == "5");
  CHECK(rational_from_string("6/8") == rational(3, 4));
  CHECK(rational_from_string("-2") == rational(-2));
  CHECK_THROWS_AS(rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
}

TEST_CASE("root-of-unity identities") {
  CycNum w = CycNum::omega();
  CHECK(w * CycNum::omega_pow(2) == CycNum(1));
  CHECK(CycNum(1) + w + w * w == CycNum(0));
  CHECK(w.conj() == CycNum::omega_pow(2));
  CycNum d = w - CycNum::omega_pow(2);
  CHECK(d * d == CycNum(-3));  // (w - w^2)^2 = -3
  CHECK(CycNum::omega_pow(-1) == CycNum::omega_pow(2));
  CHECK(CycNum::omega_pow(5) == CycNum::omega_pow(2));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(4242);
  for (int t = 0; t < 200; ++t) {
    CycNum x = random_cyc(rng), y = random_cyc(rng), z = random_cyc(rng);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK(x.norm2() == (x * x.conj()).a);
    CHECK((x * x.conj()).is_rational());
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == CycNum(1));
      CHECK(x / x == CycNum(1));
    }
  }
  CHECK_THROWS_AS(CycNum(0).inverse(), std::domain_error);
}

TEST_CASE("matrix trace, tensor product, positivity") {
  CHECK(CycMatrix::identity(9).trace() == CycNum(9));

  // Cross-module oracle: kron of the one-qutrit factors equals to_matrix.
  CycMatrix zx = testsupport::oracle_z().kron(testsupport::oracle_x());
  CHECK(zx == to_matrix(parse_op("ZX", 2)));

  std::mt19937 rng(99);
  for (int t = 0; t < 10; ++t) {
    CycMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m.at(i, j) = random_cyc(rng);
    CycNum g = (m * m.adjoint()).trace();
    CHECK(g.is_rational());
    CHECK(g.a >= 0);
    // Hermitean matrices have rational trace.
    CHECK((m + m.adjoint()).trace().is_rational());
  }

  CHECK_THROWS_AS(CycMatrix(2, 3) * CycMatrix(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(CycMatrix(2, 2) + CycMatrix(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(CycMatrix(2, 3).trace(), std::invalid_argument);
}

TEST_CASE("inner and trace_product agree with the definitions") {
  std::mt19937 rng(5);
  CycMatrix a(3, 3), b(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      a.at(i, j) = random_cyc(rng);
      b.at(i, j) = random_cyc(rng);
    }
  CHECK(a.inner(b) == (a.adjoint() * b).trace());
  CHECK(CycMatrix::trace_product(a, b) == (a * b).trace());
}

TEST_CASE("partial trace on product and mixed inputs") {
  // |00><00| reduced to slot 0 is |0><0|.
  CycMatrix p(9, 9);
  p.at(0, 0) = CycNum(1);
  CycMatrix r = partial_trace(p, 2, {0});
  CycMatrix expect(3, 3);
  expect.at(0, 0) = CycNum(1);
  CHECK(r == expect);

  std::mt19937 rng(1234);
  for (int t = 0; t < 5; ++t) {
    CycMatrix m(27, 27);
    for (int i = 0; i < 27; ++i)
      for (int j = 0; j < 27; ++j) m.at(i, j) = random_cyc(rng);
    CHECK(partial_trace(m, 3, {0}).trace() == m.trace());
    CHECK(partial_trace(m, 3, {1}).trace() == m.trace());
    CHECK(partial_trace(m, 3, {0, 2}).trace() == m.trace());
    // Tracing in two stages agrees with one stage.
    CHECK(partial_trace(partial_trace(m, 3, {0, 1}), 2, {0}) ==
          partial_trace(m, 3, {0}));
  }

  CHECK_THROWS_AS(partial_trace(p, 2, {}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(p, 2, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(p, 2, {2}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(p, 2, {0, 0}), std::invalid_argument);
}

TEST_CASE("projector predicate") {
  CycMatrix p(3, 3);
  p.at(0, 0) = CycNum(1);
  CHECK(p.is_projector());
  CycMatrix q = p;
  q.at(0, 0) = CycNum(rational(1, 2));
  CHECK(q.is_hermitian());
  CHECK_FALSE(q.is_projector());
  CycMatrix h(3, 3);
  h.at(0, 1) = CycNum::omega();
  CHECK_FALSE(h.is_hermitian());
}

}  // TEST_SUITE
