#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "cyclequiv/poly.hpp"

namespace cyclequiv {

// n = n_q * p^i with gcd(n_q, p) = 1, p the characteristic of GF(q).
struct LengthSplit {
  std::size_t n = 1;
  std::uint32_t q = 2;
  unsigned p = 2;
  std::size_t n_q = 1;
  unsigned i = 0;
  // p^i: the multiplicity of every irreducible factor of x^n - 1.
  unsigned repeat = 1;

  friend bool operator==(const LengthSplit&, const LengthSplit&) = default;
};

LengthSplit split_length(std::size_t n, std::uint32_t q);

// q-cyclotomic cosets modulo n_q, each sorted, ordered by minimal element.
std::vector<std::vector<std::size_t>> cyclotomic_cosets(std::size_t n_q, std::uint32_t q);

class CosetTable;
using CosetTablePtr = std::shared_ptr<const CosetTable>;

// The cyclotomic cosets for length n over a field, with the fixed root of
// unity alpha and the minimal polynomial P(S) of alpha^s for every coset.
class CosetTable {
 public:
  static CosetTablePtr make(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  const LengthSplit& split() const { return split_; }
  std::size_t n() const { return split_.n; }
  std::size_t n_q() const { return split_.n_q; }
  unsigned repeat() const { return split_.repeat; }
  std::size_t count() const { return cosets_.size(); }
  const std::vector<std::vector<std::size_t>>& cosets() const { return cosets_; }
  const std::vector<std::size_t>& coset(std::size_t j) const { return cosets_[j]; }
  std::size_t coset_of(std::size_t z) const { return coset_of_[z % split_.n_q]; }
  // The root of unity and the coset polynomials are built on first use, so
  // tables whose splitting field is out of reach can still be enumerated.
  // Both throw std::out_of_range when GF(q^t) cannot be represented.
  // root().extension is null when GF(q^t) exceeds the table bound; the coset
  // polynomials then come from polynomial arithmetic modulo the same modulus.
  const RootOfUnity& root() const;
  // P(S_j) over the base field.
  const Poly& coset_poly(std::size_t j) const;

  CosetTable(FieldPtr field, std::size_t n);

 private:
  FieldPtr field_;
  LengthSplit split_;
  std::vector<std::vector<std::size_t>> cosets_;
  std::vector<std::size_t> coset_of_;
  void build_algebra() const;

  mutable std::once_flag built_;
  mutable RootOfUnity root_;
  mutable std::vector<Poly> polys_;
};

// The coset polynomials of t recomputed with polynomial arithmetic in
// GF(p)[y]/(M) instead of log tables (prime fields only).
std::vector<Poly> coset_polynomials_by_quotient(const CosetTable& t);

// A union of not necessarily distinct cyclotomic cosets, stored as one
// multiplicity per coset of its table.
class CosetMultiset {
 public:
  CosetMultiset(CosetTablePtr table, std::vector<unsigned> multiplicities);
  static CosetMultiset empty(CosetTablePtr table);
  static CosetMultiset full(CosetTablePtr table);

  const CosetTablePtr& table() const { return table_; }
  const std::vector<unsigned>& multiplicities() const { return mult_; }
  unsigned multiplicity(std::size_t coset) const { return mult_[coset]; }
  // Total size counted with multiplicity; equals the degree of P(MS).
  std::size_t size() const;
  // Per-residue multiplicity over Z_{n_q}.
  std::vector<unsigned> element_multiplicities() const;

  // Tables are deterministic in (field, n), so they compare structurally.
  friend bool operator==(const CosetMultiset& a, const CosetMultiset& b) {
    return a.mult_ == b.mult_ && (a.table_ == b.table_ || (a.table_->field() == b.table_->field() &&
                                                           a.table_->n() == b.table_->n()));
  }

 private:
  CosetTablePtr table_;
  std::vector<unsigned> mult_;
};

Poly coset_to_poly(const CosetMultiset& ms);
// Inverse of coset_to_poly; g is normalized to be monic first. Throws
// std::invalid_argument when g does not divide x^n - 1.
CosetMultiset poly_to_coset(const Poly& g, const CosetTablePtr& table);

// "{1,2,4}^2 + {0}": each braced group names the cosets of its members, "^k"
// repeats them, "+" is multiset union. "{}" is the empty multiset.
std::string format_multiset(const CosetMultiset& ms);
CosetMultiset parse_multiset(const CosetTablePtr& table, std::string_view text);
// Polynomial strings start with '['; everything else is read as a multiset.
CosetMultiset parse_generator(const CosetTablePtr& table, std::string_view text);

}  // namespace cyclequiv
