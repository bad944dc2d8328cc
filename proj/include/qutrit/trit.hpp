#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qutrit {

// Arithmetic in Z_3. Trits always hold a value in {0,1,2}.
using Trit = std::uint8_t;

inline Trit trit_add(Trit a, Trit b) { return static_cast<Trit>((a + b) % 3); }
inline Trit trit_sub(Trit a, Trit b) { return static_cast<Trit>((3 + a - b) % 3); }
inline Trit trit_mul(Trit a, Trit b) { return static_cast<Trit>((a * b) % 3); }
inline Trit trit_neg(Trit a) { return static_cast<Trit>((3 - a) % 3); }

// Fixed-capacity vector of trits packed two bits per slot. Unused bits stay
// zero, so whole-word comparison is valid component-wise equality.
class TritVec {
 public:
  static constexpr int max_size = 32;

  TritVec() = default;
  explicit TritVec(int n) : size_(check_size(n)) {}

  int size() const { return size_; }

  Trit get(int i) const { return static_cast<Trit>((bits_ >> (2 * i)) & 3u); }

  void set(int i, Trit v) {
    bits_ = (bits_ & ~(std::uint64_t{3} << (2 * i))) |
            (std::uint64_t{v} << (2 * i));
  }

  bool is_zero() const { return bits_ == 0; }

  TritVec plus(const TritVec& o) const {
    TritVec r(size_);
    for (int i = 0; i < size_; ++i) r.set(i, trit_add(get(i), o.get(i)));
    return r;
  }

  TritVec minus(const TritVec& o) const {
    TritVec r(size_);
    for (int i = 0; i < size_; ++i) r.set(i, trit_sub(get(i), o.get(i)));
    return r;
  }

  TritVec negated() const {
    TritVec r(size_);
    for (int i = 0; i < size_; ++i) r.set(i, trit_neg(get(i)));
    return r;
  }

  TritVec scaled(Trit c) const {
    TritVec r(size_);
    for (int i = 0; i < size_; ++i) r.set(i, trit_mul(get(i), c));
    return r;
  }

  Trit dot(const TritVec& o) const {
    int acc = 0;
    for (int i = 0; i < size_; ++i) acc += get(i) * o.get(i);
    return static_cast<Trit>(acc % 3);
  }

  bool operator==(const TritVec& o) const {
    return size_ == o.size_ && bits_ == o.bits_;
  }
  bool operator!=(const TritVec& o) const { return !(*this == o); }

  // Lexicographic from slot 0.
  bool operator<(const TritVec& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    for (int i = 0; i < size_; ++i) {
      if (get(i) != o.get(i)) return get(i) < o.get(i);
    }
    return false;
  }

 private:
  static int check_size(int n) {
    if (n < 0 || n > max_size)
      throw std::invalid_argument("TritVec: size out of range: " +
                                  std::to_string(n));
    return n;
  }

  std::uint64_t bits_ = 0;
  std::uint8_t size_ = 0;
};

}  // namespace qutrit
