#include "cyclequiv/matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace cyclequiv {

void Matrix::append_row(std::span<const Elem> v) {
  if (v.size() != cols_) throw std::invalid_argument("matrix: row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out.set(r, c, at(r, cols[c]));
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix out(field_, 0, cols_);
  for (auto r : rows) out.append_row(row(r));
  return out;
}

Echelon row_reduce(const Matrix& m, std::span<const std::size_t> column_order) {
  const auto& F = *m.field();
  Matrix a = m;
  std::vector<std::size_t> order;
  if (column_order.empty()) {
    order.resize(m.cols());
    std::iota(order.begin(), order.end(), 0);
  } else {
    order.assign(column_order.begin(), column_order.end());
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c : order) {
    if (r == a.rows()) break;
    std::size_t sel = r;
    while (sel < a.rows() && a.at(sel, c).v == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const Elem t = a.at(r, k);
        a.set(r, k, a.at(sel, k));
        a.set(sel, k, t);
      }
    const Elem inv = F.inv(a.at(r, c));
    for (std::size_t k = 0; k < a.cols(); ++k) a.set(r, k, F.mul(a.at(r, k), inv));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const Elem f = a.at(i, c);
      if (f.v == 0) continue;
      for (std::size_t k = 0; k < a.cols(); ++k) a.set(i, k, F.sub(a.at(i, k), F.mul(f, a.at(r, k))));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::size_t> keep(r);
  std::iota(keep.begin(), keep.end(), 0);
  return {a.select_rows(keep), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::optional<std::vector<Elem>> solve_in_row_space(const Echelon& e, std::span<const Elem> v) {
  const auto& F = *e.reduced.field();
  if (v.size() != e.reduced.cols()) throw std::invalid_argument("row space: vector length mismatch");
  std::vector<Elem> rest(v.begin(), v.end());
  std::vector<Elem> coeffs(e.rank(), F.zero());
  for (std::size_t r = 0; r < e.rank(); ++r) {
    const Elem c = rest[e.pivots[r]];
    coeffs[r] = c;
    if (c.v == 0) continue;
    const auto row = e.reduced.row(r);
    for (std::size_t k = 0; k < rest.size(); ++k) rest[k] = F.sub(rest[k], F.mul(c, row[k]));
  }
  for (auto x : rest)
    if (x.v != 0) return std::nullopt;
  return coeffs;
}

bool in_row_space(const Echelon& e, std::span<const Elem> v) { return solve_in_row_space(e, v).has_value(); }

Matrix null_space(const Matrix& m) {
  const auto& F = *m.field();
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Matrix out(m.field(), 0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(m.cols(), F.zero());
    v[free] = F.one();
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = F.neg(e.reduced.at(r, free));
    out.append_row(v);
  }
  return out;
}

std::vector<Elem> vec_mul(std::span<const Elem> v, const Matrix& m) {
  const auto& F = *m.field();
  if (v.size() != m.rows()) throw std::invalid_argument("vec_mul: length mismatch");
  std::vector<Elem> out(m.cols(), F.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r].v == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] = F.add(out[c], F.mul(v[r], m.at(r, c)));
  }
  return out;
}

std::size_t weight(std::span<const Elem> v) {
  std::size_t w = 0;
  for (auto x : v) w += x.v != 0;
  return w;
}

}  // namespace cyclequiv
