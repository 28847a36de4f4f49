#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclequiv/codes.hpp"
#include "cyclequiv/cosets.hpp"

namespace cyclequiv {

// strict gates a translation b != 0 on n_q | b * |MS| * (q - 1); literal accepts any b.
enum class Mode { strict, literal };

std::string to_string(Mode m);
Mode parse_mode(std::string_view s);

// z -> e*z + b (mod n_q) maps the first multiset onto the second, multiplicities included.
// The matching polynomial map is x -> x^(e^-1) followed by x -> alpha^(-b) x.
struct AffineWitness {
  std::size_t e = 1;
  std::size_t b = 0;

  friend bool operator==(const AffineWitness&, const AffineWitness&) = default;
};

// Counts elementary steps: one per candidate (e, b) pair plus one per element comparison.
struct OpCounter {
  std::uint64_t ops = 0;
};

// A multiset flattened for repeated affine tests.
struct PreparedMultiset {
  std::size_t n_q = 1;
  std::size_t size = 0;
  std::vector<unsigned> mult;  // per residue
  std::vector<std::size_t> support;  // residues with nonzero multiplicity, ascending

  explicit PreparedMultiset(const CosetMultiset& ms);
};

// The unit search order shared by all affine tests on one table: polynomial
// exponents u ascending, keeping only the least u in each coset u<q>. The
// induced coset multipliers are e = u^-1.
struct AffineSearchPlan {
  std::size_t n_q = 1;
  std::uint32_t q = 2;
  std::vector<std::size_t> multipliers;

  AffineSearchPlan(std::size_t n_q, std::uint32_t q);
  explicit AffineSearchPlan(const CosetTable& t) : AffineSearchPlan(t.n_q(), t.field()->size()) {}
};

std::optional<AffineWitness> affine_equivalent(const PreparedMultiset& a, const PreparedMultiset& b,
                                               const AffineSearchPlan& plan, Mode mode, OpCounter* counter = nullptr);
std::optional<AffineWitness> affine_equivalent(const CosetMultiset& a, const CosetMultiset& b,
                                               Mode mode = Mode::strict, OpCounter* counter = nullptr);

// Applies z -> e z + b to every element, with multiplicity.
std::vector<unsigned> apply_affine(const std::vector<unsigned>& element_mult, const AffineWitness& w);
// The map sending b back to a.
AffineWitness inverse(const AffineWitness& w, std::size_t n_q);
// First apply `first`, then `second`.
AffineWitness compose(const AffineWitness& first, const AffineWitness& second, std::size_t n_q);

enum class EquivStatus { equivalent, unknown, inequivalent };
std::string to_string(EquivStatus s);

struct EquivVerdict {
  EquivStatus status = EquivStatus::unknown;
  std::optional<AffineWitness> witness;
  Mode mode = Mode::strict;
};

// equivalent when a witness exists; inequivalent when none exists and the test
// is complete (binary field, or the dimensions differ); unknown otherwise.
EquivVerdict verdict(const CosetMultiset& a, const CosetMultiset& b, Mode mode = Mode::strict);

// A monomial map: coordinate i goes to perm[i], scaled by scale[i].
struct Monomial {
  std::vector<std::size_t> perm;
  std::vector<Elem> scale;
};

// Applies the n x n monomial (or general) matrix to a row vector.
std::vector<Elem> apply_monomial(std::span<const Elem> v, const Monomial& m, const Field& f);
// Every row of a * mat lies in the code generated by b.
bool maps_into(const GeneratorMatrix& a, const Matrix& mat, const GeneratorMatrix& b);
Matrix to_matrix(const Monomial& m, const FieldPtr& f);

enum class BruteForceResult { equivalent, not_equivalent, exhausted };
std::string to_string(BruteForceResult r);

struct BruteForceOutcome {
  BruteForceResult result = BruteForceResult::exhausted;
  std::optional<Monomial> map;  // sends code a onto code b
  std::uint64_t candidates = 0;
};

// Exhaustive search for a monomial map sending code a onto code b. Refuses
// (exhausted) when n! * (q-1)^(n-1) exceeds cap. Field automorphisms are
// tried as well only when with_automorphisms is set.
BruteForceOutcome brute_force_equivalent(const GeneratorMatrix& a, const GeneratorMatrix& b,
                                         std::uint64_t cap = 100'000'000, bool with_automorphisms = false);

}  // namespace cyclequiv
