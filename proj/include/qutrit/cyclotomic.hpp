#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace qutrit {

// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

// Builds a canonicalized rational from a num/den pair.
Rational rational(long num, long den = 1);

// Parses "num" or "num/den"; throws on malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

// Serializes as "num" or "num/den".
std::string to_string(const Rational& r);

// An element a + b*w of Q(w), w = exp(2*pi*i/3). Every product is reduced
// with w^2 = -1 - w, so the (a, b) pair is a canonical representation.
struct CycNum {
  Rational a{0};
  Rational b{0};

  CycNum() = default;
  CycNum(Rational re) : a(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  CycNum(long re) : a(re) {}                 // NOLINT(google-explicit-constructor)
  CycNum(Rational re, Rational wcoef) : a(std::move(re)), b(std::move(wcoef)) {}

  // w^c for c taken mod 3.
  static CycNum omega_pow(long c);
  static CycNum omega() { return omega_pow(1); }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  // Complex conjugate: conj(a + b*w) = (a - b) - b*w.
  CycNum conj() const { return CycNum(a - b, Rational(-b)); }

  // Squared modulus |a + b*w|^2 = a^2 - a*b + b^2; always rational.
  Rational norm2() const { return a * a - a * b + b * b; }

  CycNum inverse() const;

  CycNum operator-() const { return CycNum(Rational(-a), Rational(-b)); }
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);

  friend CycNum operator+(CycNum x, const CycNum& y) { return x += y; }
  friend CycNum operator-(CycNum x, const CycNum& y) { return x -= y; }
  friend CycNum operator*(CycNum x, const CycNum& y) { return x *= y; }
  friend CycNum operator/(const CycNum& x, const CycNum& y) {
    return x * y.inverse();
  }
  friend bool operator==(const CycNum& x, const CycNum& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const CycNum& x, const CycNum& y) { return !(x == y); }
};

// Human-readable form, e.g. "1/3", "w", "-1+2/3w".
std::string to_string(const CycNum& c);

// Dense row-major matrix over Q(w). Sizes in this project stay small
// (<= 27 routinely, <= 729 for operator-space Gram checks), so there is no
// sparse path.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(int rows, int cols)
      : rows_(check_dim(rows)), cols_(check_dim(cols)), e_(size_t(rows) * cols) {}

  static CycMatrix identity(int n);
  static CycMatrix zero(int rows, int cols) { return CycMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  CycNum& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const CycNum& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix operator+(const CycMatrix& o) const;
  CycMatrix operator-(const CycMatrix& o) const;
  CycMatrix scaled(const CycNum& s) const;
  CycMatrix adjoint() const;  // conjugate transpose
  CycNum trace() const;

  // Kronecker (tensor) product, row factor on the left.
  CycMatrix kron(const CycMatrix& o) const;

  bool operator==(const CycMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const CycMatrix& o) const { return !(*this == o); }

  bool is_hermitian() const { return *this == adjoint(); }
  bool is_projector() const { return is_hermitian() && *this * *this == *this; }

  // Tr(A^dag B) = sum conj(A_ij) B_ij; skips structural zeros of A.
  CycNum inner(const CycMatrix& o) const;

  // Tr(A B) in O(rows*cols) elementwise products.
  static CycNum trace_product(const CycMatrix& x, const CycMatrix& y);

 private:
  static int check_dim(int d) {
    if (d <= 0) throw std::invalid_argument("CycMatrix: nonpositive dimension");
    return d;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<CycNum> e_;
};

// Reduced matrix of a 3^n x 3^n operator, keeping the (0-based) qutrit slots
// listed in `keep` and tracing out the rest. Slot 0 is the leftmost tensor
// factor. Trace is preserved exactly.
CycMatrix partial_trace(const CycMatrix& m, int n_qutrits,
                        const std::vector<int>& keep);

}  // namespace qutrit
