#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclequiv/matrix.hpp"
#include "cyclequiv/poly.hpp"

namespace cyclequiv {

class RankError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// k x n matrix of full row rank.
class GeneratorMatrix {
 public:
  explicit GeneratorMatrix(Matrix m);

  const Matrix& matrix() const { return m_; }
  const FieldPtr& field() const { return m_.field(); }
  std::size_t k() const { return m_.rows(); }
  std::size_t n() const { return m_.cols(); }
  const Echelon& echelon() const { return echelon_; }

  std::vector<Elem> encode(std::span<const Elem> message) const { return vec_mul(message, m_); }
  bool contains(std::span<const Elem> v) const { return in_row_space(echelon_, v); }

 private:
  Matrix m_;
  Echelon echelon_;
};

// A cyclic code <g> with g monic, g * h = x^n - 1.
struct CyclicCodeSpec {
  FieldPtr field;
  std::size_t n = 0;
  Poly g;
  Poly h;

  std::size_t k() const { return n - static_cast<std::size_t>(g.degree()); }
  // Normalizes g to monic; throws if it does not divide x^n - 1.
  static CyclicCodeSpec make(const Poly& g, std::size_t n);
};

// 1-generator quasi-cyclic code of index ell generated by (g, g f_2, ..., g f_ell)
// over blocks of length m.
struct QCCodeSpec {
  FieldPtr field;
  std::size_t m = 0;
  std::size_t ell = 1;
  Poly g;
  Poly h;
  std::vector<Poly> fs;  // f_2 .. f_ell

  std::size_t n() const { return m * ell; }
  std::size_t k() const { return m - static_cast<std::size_t>(g.degree()); }
  // Throws if g does not divide x^m - 1, some deg f >= m, or gcd(f, h) != 1.
  static QCCodeSpec make(const Poly& g, std::size_t m, std::vector<Poly> fs);
};

GeneratorMatrix circulant_matrix(const Poly& g, std::size_t n);
GeneratorMatrix qc_matrix(const QCCodeSpec& spec);

// [n-1, k-1]: codewords vanishing at pos, with pos deleted.
GeneratorMatrix shorten(const GeneratorMatrix& m, std::size_t pos);
// [n-1, k]: pos deleted.
GeneratorMatrix puncture(const GeneratorMatrix& m, std::size_t pos);
// [n+1, k]: append the negated coordinate sum.
GeneratorMatrix extend(const GeneratorMatrix& m);
// The same constructions on a single codeword.
std::vector<Elem> drop_coordinate(std::span<const Elem> v, std::size_t pos);
std::vector<Elem> extend_word(const Field& f, std::span<const Elem> v);

// A_0..A_n by walking all q^k messages; throws std::length_error above cap.
std::vector<std::uint64_t> weight_enumerator(const GeneratorMatrix& m, std::uint64_t cap = std::uint64_t{1} << 24);

// Dual code generator (a parity-check matrix of m).
GeneratorMatrix dual(const GeneratorMatrix& m);

}  // namespace cyclequiv
