#pragma once

// Byte-table arithmetic for fields with q <= 256, used by the enumeration
// kernels. Element bytes use the same encoding as Elem::v.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cyclequiv/field.hpp"

namespace cyclequiv::detail {

class ByteField {
 public:
  explicit ByteField(const Field& f) : q_(f.size()), p_(f.characteristic()), prime_(f.is_prime()) {
    if (q_ > 256) throw std::invalid_argument("enumeration kernels support q <= 256 only");
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.resize(q_);
    for (unsigned a = 0; a < q_; ++a) {
      neg_[a] = static_cast<std::uint8_t>(f.neg(Elem{a}).v);
      inv_[a] = a == 0 ? 0 : static_cast<std::uint8_t>(f.inv(Elem{a}).v);
      for (unsigned b = 0; b < q_; ++b) {
        add_[a * q_ + b] = static_cast<std::uint8_t>(f.add(Elem{a}, Elem{b}).v);
        mul_[a * q_ + b] = static_cast<std::uint8_t>(f.mul(Elem{a}, Elem{b}).v);
      }
    }
  }

  unsigned q() const { return q_; }
  unsigned p() const { return p_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, neg_[b]); }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }

  // dst = a + b over n bytes.
  void add_rows(std::uint8_t* __restrict dst, const std::uint8_t* __restrict a, const std::uint8_t* __restrict b,
                std::size_t n) const {
    if (prime_) {
      const std::uint8_t p = static_cast<std::uint8_t>(p_);
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t s = static_cast<std::uint8_t>(a[i] + b[i]);
        dst[i] = s >= p ? static_cast<std::uint8_t>(s - p) : s;
      }
    } else if (p_ == 2) {
      for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] ^ b[i];
    } else {
      for (std::size_t i = 0; i < n; ++i) dst[i] = add(a[i], b[i]);
    }
  }

  // In-place dst += b.
  void add_into(std::uint8_t* dst, const std::uint8_t* b, std::size_t n) const {
    if (prime_) {
      const std::uint8_t p = static_cast<std::uint8_t>(p_);
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t s = static_cast<std::uint8_t>(dst[i] + b[i]);
        dst[i] = s >= p ? static_cast<std::uint8_t>(s - p) : s;
      }
    } else if (p_ == 2) {
      for (std::size_t i = 0; i < n; ++i) dst[i] ^= b[i];
    } else {
      for (std::size_t i = 0; i < n; ++i) dst[i] = add(dst[i], b[i]);
    }
  }

  // Hamming weight of a + b.
  unsigned weight_of_sum(const std::uint8_t* __restrict a, const std::uint8_t* __restrict b, std::size_t n) const {
    unsigned w = 0;
    if (prime_) {
      const std::uint8_t p = static_cast<std::uint8_t>(p_);
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t s = static_cast<std::uint8_t>(a[i] + b[i]);
        w += (s != 0) & (s != p);
      }
    } else if (p_ == 2) {
      for (std::size_t i = 0; i < n; ++i) w += (a[i] ^ b[i]) != 0;
    } else {
      for (std::size_t i = 0; i < n; ++i) w += add(a[i], b[i]) != 0;
    }
    return w;
  }

  static unsigned weight(const std::uint8_t* a, std::size_t n) {
    unsigned w = 0;
    for (std::size_t i = 0; i < n; ++i) w += a[i] != 0;
    return w;
  }

 private:
  unsigned q_;
  unsigned p_;
  bool prime_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
};

}  // namespace cyclequiv::detail
