#include "cyclequiv/codes.hpp"

#include "byte_field.hpp"

namespace cyclequiv {

GeneratorMatrix::GeneratorMatrix(Matrix m) : m_(std::move(m)), echelon_(row_reduce(m_)) {
  if (echelon_.rank() != m_.rows())
    throw RankError("generator matrix: rank " + std::to_string(echelon_.rank()) + " < " + std::to_string(m_.rows()) +
                    " rows");
}

CyclicCodeSpec CyclicCodeSpec::make(const Poly& g, std::size_t n) {
  if (g.is_zero()) throw std::invalid_argument("cyclic code: zero generator");
  const Poly xn1 = Poly::x_n_minus_one(g.field(), n);
  CyclicCodeSpec s{g.field(), n, g.monic(), Poly(g.field())};
  auto dm = divmod(xn1, s.g);
  if (!dm.remainder.is_zero())
    throw std::invalid_argument("cyclic code: " + format_poly(g) + " does not divide x^" + std::to_string(n) + " - 1");
  s.h = std::move(dm.quotient);
  return s;
}

QCCodeSpec QCCodeSpec::make(const Poly& g, std::size_t m, std::vector<Poly> fs) {
  const auto cyc = CyclicCodeSpec::make(g, m);
  QCCodeSpec s{g.field(), m, fs.size() + 1, cyc.g, cyc.h, {}};
  for (std::size_t j = 0; j < fs.size(); ++j) {
    require_same_field(g, fs[j]);
    if (fs[j].degree() >= static_cast<int>(m))
      throw std::invalid_argument("qc code: f_" + std::to_string(j + 2) + " has degree >= m");
    if (!gcd(fs[j], s.h).is_one())
      throw std::invalid_argument("qc code: gcd(f_" + std::to_string(j + 2) + ", h) != 1");
  }
  s.fs = std::move(fs);
  return s;
}

GeneratorMatrix circulant_matrix(const Poly& g, std::size_t n) {
  if (g.is_zero()) throw std::invalid_argument("circulant: zero generator");
  if (g.degree() >= static_cast<int>(n))
    throw std::invalid_argument("circulant: deg g = " + std::to_string(g.degree()) + " >= n = " + std::to_string(n));
  const std::size_t k = n - static_cast<std::size_t>(g.degree());
  Matrix m(g.field(), k, n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) m.set(r, r + i, g.coeffs()[i]);
  return GeneratorMatrix(std::move(m));
}

GeneratorMatrix qc_matrix(const QCCodeSpec& spec) {
  const std::size_t m = spec.m;
  const std::size_t k = spec.k();
  Matrix out(spec.field, k, m * spec.ell);
  std::vector<Poly> blocks{spec.g};
  for (const auto& f : spec.fs) blocks.push_back(mulmod(spec.g, f, m));
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& base = blocks[b];
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t i = 0; i < base.coeffs().size(); ++i) out.set(r, b * m + (r + i) % m, base.coeffs()[i]);
  }
  return GeneratorMatrix(std::move(out));
}

std::vector<Elem> drop_coordinate(std::span<const Elem> v, std::size_t pos) {
  std::vector<Elem> out;
  out.reserve(v.size() - 1);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != pos) out.push_back(v[i]);
  return out;
}

std::vector<Elem> extend_word(const Field& f, std::span<const Elem> v) {
  std::vector<Elem> out(v.begin(), v.end());
  Elem s = f.zero();
  for (auto x : v) s = f.add(s, x);
  out.push_back(f.neg(s));
  return out;
}

GeneratorMatrix shorten(const GeneratorMatrix& m, std::size_t pos) {
  if (pos >= m.n()) throw std::out_of_range("shorten: position " + std::to_string(pos) + " out of range");
  if (m.k() < 2) throw RankError("shorten: dimension must be at least 2");
  std::vector<std::size_t> order{pos};
  for (std::size_t c = 0; c < m.n(); ++c)
    if (c != pos) order.push_back(c);
  const Echelon e = row_reduce(m.matrix(), order);
  if (e.pivots.empty() || e.pivots[0] != pos) throw RankError("shorten: coordinate is identically zero");
  Matrix out(m.field(), 0, m.n() - 1);
  for (std::size_t r = 1; r < e.rank(); ++r) out.append_row(drop_coordinate(e.reduced.row(r), pos));
  return GeneratorMatrix(std::move(out));
}

GeneratorMatrix puncture(const GeneratorMatrix& m, std::size_t pos) {
  if (pos >= m.n()) throw std::out_of_range("puncture: position " + std::to_string(pos) + " out of range");
  Matrix out(m.field(), 0, m.n() - 1);
  for (std::size_t r = 0; r < m.k(); ++r) out.append_row(drop_coordinate(m.matrix().row(r), pos));
  return GeneratorMatrix(std::move(out));
}

GeneratorMatrix extend(const GeneratorMatrix& m) {
  Matrix out(m.field(), 0, m.n() + 1);
  for (std::size_t r = 0; r < m.k(); ++r) out.append_row(extend_word(*m.field(), m.matrix().row(r)));
  return GeneratorMatrix(std::move(out));
}

GeneratorMatrix dual(const GeneratorMatrix& m) { return GeneratorMatrix(null_space(m.matrix())); }

std::vector<std::uint64_t> weight_enumerator(const GeneratorMatrix& m, std::uint64_t cap) {
  const auto& F = *m.field();
  const std::size_t n = m.n();
  const std::size_t k = m.k();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > cap / F.size()) throw std::length_error("weight_enumerator: q^k exceeds the cap");
    total *= F.size();
  }
  detail::ByteField bf(F);
  // Walk GF(q)^k as a GF(p)-space: basis element x^j times row i, for j < m.
  const unsigned p = F.characteristic();
  std::vector<std::vector<std::uint8_t>> rows;
  for (std::size_t i = 0; i < k; ++i) {
    for (unsigned j = 0; j < F.degree(); ++j) {
      const Elem basis = Elem{static_cast<std::uint32_t>(ipow(p, j))};
      std::vector<std::uint8_t> r(n);
      for (std::size_t c = 0; c < n; ++c) r[c] = bf.mul(static_cast<std::uint8_t>(basis.v),
                                                        static_cast<std::uint8_t>(m.matrix().at(i, c).v));
      rows.push_back(std::move(r));
    }
  }
  std::vector<std::uint64_t> a(n + 1, 0);
  std::vector<std::uint8_t> cw(n, 0);
  a[0] = 1;
  // Step t changes the p-ary digit at index v_p(t); each change adds that row once.
  for (std::uint64_t t = 1; t < total; ++t) {
    std::uint64_t x = t;
    std::size_t d = 0;
    while (x % p == 0) {
      x /= p;
      ++d;
    }
    bf.add_into(cw.data(), rows[d].data(), n);
    ++a[detail::ByteField::weight(cw.data(), n)];
  }
  return a;
}

}  // namespace cyclequiv
