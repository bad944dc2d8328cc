#include "qutrit/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

namespace qutrit {

Rational rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("rational: malformed value '" + s + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("rational: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

CycNum CycNum::omega_pow(long c) {
  switch (((c % 3) + 3) % 3) {
    case 0:
      return CycNum(1);
    case 1:
      return CycNum(Rational(0), Rational(1));
    default:
      return CycNum(Rational(-1), Rational(-1));  // w^2 = -1 - w
  }
}

CycNum CycNum::inverse() const {
  Rational n = norm2();
  if (n == 0) throw std::domain_error("CycNum: division by zero");
  CycNum c = conj();
  return CycNum(c.a / n, c.b / n);
}

CycNum& CycNum::operator+=(const CycNum& o) {
  a += o.a;
  b += o.b;
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, then w^2 = -1 - w.
  Rational bd = b * o.b;
  Rational na = a * o.a - bd;
  Rational nb = a * o.b + b * o.a - bd;
  a = std::move(na);
  b = std::move(nb);
  return *this;
}

std::string to_string(const CycNum& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  if (c.a != 0) os << to_string(c.a);
  if (c.b != 0) {
    if (c.b > 0 && c.a != 0) os << "+";
    if (c.b == -1)
      os << "-";
    else if (c.b != 1)
      os << to_string(c.b);
    os << "w";
  }
  return os.str();
}

CycMatrix CycMatrix::identity(int n) {
  CycMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = CycNum(1);
  return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("CycMatrix: shape mismatch in product");
  CycMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const CycNum& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const CycNum& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("CycMatrix: shape mismatch in sum");
  CycMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("CycMatrix: shape mismatch in difference");
  CycMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

CycMatrix CycMatrix::scaled(const CycNum& s) const {
  CycMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
  return r;
}

CycMatrix CycMatrix::adjoint() const {
  CycMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

CycNum CycMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("CycMatrix: trace of non-square");
  CycNum t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

CycMatrix CycMatrix::kron(const CycMatrix& o) const {
  CycMatrix r(rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      for (int k = 0; k < o.rows_; ++k)
        for (int l = 0; l < o.cols_; ++l)
          r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
    }
  return r;
}

CycNum CycMatrix::inner(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("CycMatrix: shape mismatch in inner product");
  CycNum t;
  for (size_t i = 0; i < e_.size(); ++i) {
    if (e_[i].is_zero() || o.e_[i].is_zero()) continue;
    t += e_[i].conj() * o.e_[i];
  }
  return t;
}

CycNum CycMatrix::trace_product(const CycMatrix& x, const CycMatrix& y) {
  if (x.cols_ != y.rows_ || x.rows_ != y.cols_)
    throw std::invalid_argument("CycMatrix: shape mismatch in trace product");
  CycNum t;
  for (int i = 0; i < x.rows_; ++i)
    for (int j = 0; j < x.cols_; ++j) {
      if (x.at(i, j).is_zero()) continue;
      t += x.at(i, j) * y.at(j, i);
    }
  return t;
}

namespace {

int pow3(int n) {
  int r = 1;
  while (n-- > 0) r *= 3;
  return r;
}

}  // namespace

CycMatrix partial_trace(const CycMatrix& m, int n_qutrits,
                        const std::vector<int>& keep) {
  const int dim = pow3(n_qutrits);
  if (m.rows() != dim || m.cols() != dim)
    throw std::invalid_argument("partial_trace: matrix is not 3^n x 3^n");
  if (keep.empty() || static_cast<int>(keep.size()) >= n_qutrits)
    throw std::invalid_argument("partial_trace: keep must be a nonempty proper subset");
  std::vector<bool> kept(n_qutrits, false);
  for (int s : keep) {
    if (s < 0 || s >= n_qutrits || kept[s])
      throw std::invalid_argument("partial_trace: bad slot index");
    kept[s] = true;
  }

  // Digit of slot s in a base-3 index (slot 0 most significant).
  auto digit = [&](int idx, int s) { return (idx / pow3(n_qutrits - 1 - s)) % 3; };

  std::vector<int> keep_sorted(keep);
  std::sort(keep_sorted.begin(), keep_sorted.end());
  auto kept_index = [&](int idx) {
    int r = 0;
    for (int s : keep_sorted) r = r * 3 + digit(idx, s);
    return r;
  };

  CycMatrix out(pow3(int(keep.size())), pow3(int(keep.size())));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (m.at(i, j).is_zero()) continue;
      bool diag_on_traced = true;
      for (int s = 0; s < n_qutrits && diag_on_traced; ++s)
        if (!kept[s] && digit(i, s) != digit(j, s)) diag_on_traced = false;
      if (diag_on_traced) out.at(kept_index(i), kept_index(j)) += m.at(i, j);
    }
  }
  return out;
}

}  // namespace qutrit
