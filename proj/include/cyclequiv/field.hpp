#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclequiv {

// Default cap on p^m for any field we are willing to tabulate.
inline constexpr std::uint64_t kDefaultFieldBound = std::uint64_t{1} << 20;

// An element of GF(p^m), stored as the integer sum_i c_i p^i of its
// coordinates in the power basis of the field modulus. Zero is 0 and one is 1.
struct Elem {
  std::uint32_t v = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^m) with log/antilog tables. Instances are interned: make(p, m) always
// returns the same object, so fields can be compared by pointer.
class Field {
 public:
  static FieldPtr make(unsigned p, unsigned m, std::uint64_t bound = kDefaultFieldBound);
  // Accepts a field size q = p^m and factors it.
  static FieldPtr of_size(std::uint64_t q, std::uint64_t bound = kDefaultFieldBound);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint32_t size() const { return q_; }
  bool is_prime() const { return m_ == 1; }

  // Monic modulus, m + 1 coefficients ascending. For m = 1 this is x.
  const std::vector<unsigned>& modulus() const { return modulus_; }
  Elem generator() const { return generator_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return zero();
    std::uint32_t s = log_[a.v] + log_[b.v];
    if (s >= q_ - 1) s -= q_ - 1;
    return Elem{exp_[s]};
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;

  // generator^k for any integer k.
  Elem exp(std::int64_t k) const;
  // Discrete log base the generator; a must be nonzero.
  std::uint32_t log(Elem a) const;
  // Multiplicative order of a nonzero element.
  std::uint64_t order(Elem a) const;

  // Image of an integer in the prime subfield.
  Elem from_int(std::int64_t c) const;
  std::vector<unsigned> coordinates(Elem a) const;
  Elem from_coordinates(std::span<const unsigned> coords) const;

  bool contains(Elem a) const { return a.v < q_; }
  std::string name() const;

  Field(unsigned p, unsigned m);

 private:
  unsigned p_;
  unsigned m_;
  std::uint32_t q_;
  std::vector<unsigned> modulus_;
  Elem generator_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> pow_p_;  // p^i for i < m
  std::vector<std::uint8_t> add_table_;  // q*q, only for small non-prime q with p odd
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
// Multiplicative order of a modulo n (gcd(a, n) = 1, n >= 1).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);
// Inverse of a modulo n; throws if not a unit.
std::int64_t inverse_mod(std::int64_t a, std::int64_t n);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

// Polynomials over GF(p) as ascending coefficient vectors; used to build the
// extension modulus before any field object exists.
namespace prime_poly {
std::vector<unsigned> trim(std::vector<unsigned> f);
std::vector<unsigned> mulmod(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                             const std::vector<unsigned>& mod, unsigned p);
std::vector<unsigned> rem(std::vector<unsigned> a, const std::vector<unsigned>& b, unsigned p);
std::vector<unsigned> gcd(std::vector<unsigned> a, std::vector<unsigned> b, unsigned p);
bool is_irreducible(const std::vector<unsigned>& f, unsigned p);
std::vector<unsigned> powmod(const std::vector<unsigned>& a, std::uint64_t e, const std::vector<unsigned>& mod,
                             unsigned p);
// The monic irreducible of degree m that Field::make(p, m) uses as its modulus.
std::vector<unsigned> least_irreducible(unsigned p, unsigned m);
// The generator Field::make(p, m) picks for the modulus above, as coordinates
// (ascending powers of x); works beyond the table bound since only
// polynomial arithmetic is used. Requires p^m - 1 < 2^64.
std::vector<unsigned> first_primitive(unsigned p, const std::vector<unsigned>& modulus);
}  // namespace prime_poly

}  // namespace cyclequiv
