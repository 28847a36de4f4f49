#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cyclequiv/field.hpp"

namespace cyclequiv {

// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Elem{0}) {}

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem v) { data_[r * cols_ + c] = v; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Elem> v);
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

// Reduced row echelon form; zero rows dropped. pivots[r] is the pivot column of row r.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

// Gauss-Jordan elimination. When column_order is given, pivots are taken
// greedily in that order (first available column wins); otherwise left to right.
Echelon row_reduce(const Matrix& m, std::span<const std::size_t> column_order = {});
std::size_t rank(const Matrix& m);
// v in the row space of the echelon basis?
bool in_row_space(const Echelon& e, std::span<const Elem> v);
// Coefficients u with u * basis = v, if v is in the row space.
std::optional<std::vector<Elem>> solve_in_row_space(const Echelon& e, std::span<const Elem> v);
// Basis of {x : m * x^T = 0}, as rows.
Matrix null_space(const Matrix& m);
// v * m
std::vector<Elem> vec_mul(std::span<const Elem> v, const Matrix& m);
std::size_t weight(std::span<const Elem> v);

}  // namespace cyclequiv
