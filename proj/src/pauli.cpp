#include "qutrit/pauli.hpp"

#include <array>

namespace qutrit {

namespace {

// Slot tokens indexed by x*3 + z. Each non-identity letter names the
// canonical X^x Z^z factor: Y = XZ, V = XZ^2, and the squared letters cover
// the x = 2 column (e.g. V2 has exponents (2,4 mod 3) = (2,1)).
constexpr std::array<const char*, 9> kSlotToken = {
    "I", "Z", "Z2", "X", "Y", "V", "X2", "V2", "Y2"};

void check_n(int n) {
  if (n < 1 || n > TritVec::max_size)
    throw std::invalid_argument("PauliOp: qutrit count out of range: " +
                                std::to_string(n));
}

void check_same_n(const PauliOp& a, const PauliOp& b) {
  if (a.n != b.n)
    throw std::invalid_argument("PauliOp: mismatched qutrit counts (" +
                                std::to_string(a.n) + " vs " +
                                std::to_string(b.n) + ")");
}

}  // namespace

PauliOp identity_op(int n) {
  check_n(n);
  PauliOp r;
  r.n = n;
  r.x = TritVec(n);
  r.z = TritVec(n);
  return r;
}

bool op_less(const PauliOp& a, const PauliOp& b) {
  if (a.n != b.n) return a.n < b.n;
  for (int i = 0; i < a.n; ++i) {
    int ka = a.x.get(i) * 3 + a.z.get(i);
    int kb = b.x.get(i) * 3 + b.z.get(i);
    if (ka != kb) return ka < kb;
  }
  return a.phase < b.phase;
}

int op_code(const PauliOp& a) {
  int code = 0;
  for (int i = 0; i < a.n; ++i) code = code * 9 + a.x.get(i) * 3 + a.z.get(i);
  return code;
}

PauliOp op_from_code(int n, int code) {
  PauliOp r = identity_op(n);
  for (int i = n - 1; i >= 0; --i) {
    int k = code % 9;
    code /= 9;
    r.x.set(i, static_cast<Trit>(k / 3));
    r.z.set(i, static_cast<Trit>(k % 3));
  }
  return r;
}

PauliOp parse_op(std::string_view text, int n) {
  check_n(n);
  PauliOp r = identity_op(n);
  size_t pos = 0;
  if (!text.empty() && text[0] == 'w') {
    if (text.size() < 2 || text[1] < '0' || text[1] > '2')
      throw std::invalid_argument("parse_op: bad phase prefix in '" +
                                  std::string(text) + "'");
    r.phase = static_cast<Trit>(text[1] - '0');
    pos = 2;
  }
  for (int i = 0; i < n; ++i) {
    if (pos >= text.size())
      throw std::invalid_argument("parse_op: expected " + std::to_string(n) +
                                  " tokens in '" + std::string(text) + "'");
    Trit x, z;
    switch (text[pos]) {
      case 'I': x = 0; z = 0; break;
      case 'Z': x = 0; z = 1; break;
      case 'X': x = 1; z = 0; break;
      case 'Y': x = 1; z = 1; break;
      case 'V': x = 1; z = 2; break;
      default:
        throw std::invalid_argument("parse_op: bad letter '" +
                                    std::string(1, text[pos]) + "' in '" +
                                    std::string(text) + "'");
    }
    ++pos;
    if (pos < text.size() && text[pos] == '2') {
      x = trit_mul(x, 2);
      z = trit_mul(z, 2);
      ++pos;
    }
    r.x.set(i, x);
    r.z.set(i, z);
  }
  if (pos != text.size())
    throw std::invalid_argument("parse_op: trailing input in '" +
                                std::string(text) + "'");
  return r;
}

std::string format_op(const PauliOp& a) {
  std::string s;
  if (a.phase != 0) {
    s += 'w';
    s += static_cast<char>('0' + a.phase);
  }
  for (int i = 0; i < a.n; ++i) s += kSlotToken[a.x.get(i) * 3 + a.z.get(i)];
  return s;
}

PauliOp multiply(const PauliOp& a, const PauliOp& b) {
  check_same_n(a, b);
  PauliOp r;
  r.n = a.n;
  r.x = a.x.plus(b.x);
  r.z = a.z.plus(b.z);
  r.phase = trit_add(trit_add(a.phase, b.phase), a.z.dot(b.x));
  return r;
}

PauliOp dagger(const PauliOp& a) {
  // (w^p prod X^x Z^z)^dag = w^(-p) prod Z^-z X^-x = w^(x.z - p) X^-x Z^-z.
  PauliOp r;
  r.n = a.n;
  r.x = a.x.negated();
  r.z = a.z.negated();
  r.phase = trit_sub(a.x.dot(a.z), a.phase);
  return r;
}

Trit symplectic_form(const PauliOp& a, const PauliOp& b) {
  check_same_n(a, b);
  return trit_sub(a.z.dot(b.x), a.x.dot(b.z));
}

int body_count(const PauliOp& a) {
  int k = 0;
  for (int i = 0; i < a.n; ++i)
    if (a.x.get(i) != 0 || a.z.get(i) != 0) ++k;
  return k;
}

CycMatrix to_matrix(const PauliOp& a) {
  if (a.n > 6)
    throw std::invalid_argument("to_matrix: dense 3^n storage refused for n > 6");
  CycMatrix m = CycMatrix::identity(1);
  for (int i = 0; i < a.n; ++i) {
    // X^x Z^z sends |c> to w^(c z) |c+x>.
    CycMatrix f(3, 3);
    for (int c = 0; c < 3; ++c)
      f.at((c + a.x.get(i)) % 3, c) = CycNum::omega_pow(c * a.z.get(i));
    m = m.kron(f);
  }
  return m.scaled(CycNum::omega_pow(a.phase));
}

}  // namespace qutrit
