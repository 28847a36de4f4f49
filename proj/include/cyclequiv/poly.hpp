#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclequiv/field.hpp"

namespace cyclequiv {

// Malformed textual input; position is a 0-based character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Dense univariate polynomial, coefficients ascending by degree with no
// trailing zeros. The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly constant(FieldPtr field, Elem c);
  static Poly monomial(FieldPtr field, Elem c, std::size_t degree);
  static Poly x(FieldPtr field) { return monomial(field, field->one(), 1); }
  // x^n - 1
  static Poly x_n_minus_one(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  std::span<const Elem> coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == field_->one(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == field_->one(); }
  Elem lead() const { return coeffs_.empty() ? field_->zero() : coeffs_.back(); }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }
  Elem eval(Elem x) const;

  Poly monic() const;
  Poly scaled(Elem c) const;
  Poly shifted(std::size_t k) const;  // x^k * f

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

void require_same_field(const Poly& a, const Poly& b);

DivMod divmod(const Poly& f, const Poly& g);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
bool divides(const Poly& g, const Poly& f);
Poly pow(const Poly& f, unsigned e);

// f mod (x^n - 1)
Poly reduce_cyclic(const Poly& f, std::size_t n);
// (f * g) mod (x^n - 1)
Poly mulmod(const Poly& f, const Poly& g, std::size_t n);
// f(x^e) mod (x^n - 1), 0 < e < n
Poly substitute_power(const Poly& f, std::size_t e, std::size_t n);
// f(delta * x) mod (x^n - 1); delta must be nonzero.
Poly substitute_scale(const Poly& f, Elem delta, std::size_t n);

// Coefficient-wise image of f under a map between fields.
template <class Map>
Poly map_coeffs(const Poly& f, FieldPtr target, Map&& map) {
  std::vector<Elem> out;
  out.reserve(f.coeffs().size());
  for (auto c : f.coeffs()) out.push_back(map(c));
  return Poly(std::move(target), std::move(out));
}

// A primitive n-th root of unity living in GF(q^t), t minimal with n | q^t - 1,
// together with the embedding of the base field into that extension.
struct RootOfUnity {
  FieldPtr base;
  FieldPtr extension;
  unsigned t = 1;
  std::size_t n = 1;
  Elem alpha;
  std::vector<Elem> embed;  // base element index -> extension element

  Elem to_extension(Elem a) const { return embed[a.v]; }
  // Inverse of the embedding; throws std::logic_error for elements outside the subfield.
  Elem to_base(Elem a) const;
  Poly to_extension(const Poly& f) const;
  Poly to_base(const Poly& f) const;

  std::vector<std::pair<std::uint32_t, Elem>> subfield;  // (extension index, base element), sorted
};

RootOfUnity primitive_root_of_unity(const FieldPtr& field, std::size_t n,
                                    std::uint64_t bound = kDefaultFieldBound);

// Text grammar: prime fields print as bracketed digit strings ascending by
// degree ("[2021]" is 2 + 2x^2 + x^3); extension fields as comma-separated
// tokens from {0, 1, a, a^2, ...} where a is the field generator.
std::string format_poly(const Poly& f);
Poly parse_poly(const FieldPtr& field, std::string_view text);
// Conventional rendering, e.g. "x^6 + x^4 + 1".
std::string format_poly_algebraic(const Poly& f);

}  // namespace cyclequiv
