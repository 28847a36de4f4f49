#include <doctest.h>

#include <random>

#include "cyclequiv/distance.hpp"
#include "oracles.hpp"

using namespace cyclequiv;

namespace {

std::vector<Elem> cyclic_shift(std::span<const Elem> v, std::size_t block, std::size_t blocks) {
  std::vector<Elem> out(v.size());
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t i = 0; i < block; ++i) out[b * block + (i + 1) % block] = v[b * block + i];
  return out;
}

GeneratorMatrix ternary_qc(const char* g, const char* f2, const char* f3, std::size_t m) {
  const auto F3 = Field::of_size(3);
  return qc_matrix(QCCodeSpec::make(parse_poly(F3, g), m, {parse_poly(F3, f2), parse_poly(F3, f3)}));
}

}  // namespace

TEST_CASE("circulant generator matrices") {
  const auto F2 = Field::of_size(2);
  const auto g = circulant_matrix(parse_poly(F2, "[11]"), 3);
  CHECK(g.k() == 2);
  CHECK(g.matrix().at(0, 0) == Elem{1});
  CHECK(g.matrix().at(0, 1) == Elem{1});
  CHECK(g.matrix().at(0, 2) == Elem{0});
  CHECK(g.matrix().at(1, 0) == Elem{0});
  CHECK(g.matrix().at(1, 2) == Elem{1});
  const auto id = circulant_matrix(Poly::constant(F2, F2->one()), 5);
  CHECK(id.k() == 5);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) CHECK(id.matrix().at(r, c) == Elem{r == c ? 1u : 0u});
  CHECK_THROWS(circulant_matrix(parse_poly(F2, "[1101]"), 3));

  const auto F3 = Field::of_size(3);
  const auto big = circulant_matrix(parse_poly(F3, "[1212210010210120100122121]"), 146);
  CHECK(big.k() == 122);
  CHECK(big.n() == 146);
}

TEST_CASE("cyclic closure and dimension") {
  for (std::uint32_t q : {2u, 3u}) {
    const auto F = Field::of_size(q);
    for (std::size_t n = 2; n <= 64; ++n) {
      const auto t = CosetTable::make(F, n);
      try {
        (void)t->root();
      } catch (const std::out_of_range&) {
        continue;
      }
      const auto all = oracle::all_multisets(t);
      const std::size_t step = std::max<std::size_t>(1, all.size() / 40);
      for (std::size_t i = 0; i < all.size(); i += step) {
        if (all[i].size() == n) continue;
        const auto g = coset_to_poly(all[i]);
        const auto m = circulant_matrix(g, n);
        CHECK(m.k() == n - static_cast<std::size_t>(g.degree()));
        for (std::size_t r = 0; r < m.k(); ++r) CHECK(m.contains(cyclic_shift(m.matrix().row(r), n, 1)));
      }
    }
  }
}

TEST_CASE("quasi-cyclic generator matrices") {
  const auto F3 = Field::of_size(3);
  const auto g = ternary_qc("[21]", "[2200021200110200111]", "[0012002212221102101]", 20);
  CHECK(g.k() == 19);
  CHECK(g.n() == 60);
  for (std::size_t r = 0; r < g.k(); ++r) CHECK(g.contains(cyclic_shift(g.matrix().row(r), 20, 3)));
  const auto g72 = ternary_qc("[1120221]", "[010110000212001001]", "[1210221200221001]", 24);
  CHECK(g72.k() == 18);
  CHECK(g72.n() == 72);

  // ell = 1 is the circulant code.
  const auto one = qc_matrix(QCCodeSpec::make(parse_poly(F3, "[1221]"), 24, {}));
  CHECK(one.matrix() == circulant_matrix(parse_poly(F3, "[1221]"), 24).matrix());
  // f sharing a factor with h is rejected.
  CHECK_THROWS(QCCodeSpec::make(parse_poly(F3, "[21]"), 20, {parse_poly(F3, "[11]")}));
  CHECK_THROWS(QCCodeSpec::make(parse_poly(F3, "[21]"), 4, {parse_poly(F3, "[11001]")}));
}

TEST_CASE("weight enumerators") {
  const auto F2 = Field::of_size(2);
  const auto ham = circulant_matrix(parse_poly(F2, "[1101]"), 7);
  CHECK(weight_enumerator(ham) == std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1});
  const GeneratorMatrix zero(Matrix(F2, 0, 5));
  CHECK(weight_enumerator(zero) == std::vector<std::uint64_t>{1, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(weight_enumerator(ham, 8), std::length_error);

  std::mt19937_64 rng(9);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
    const auto F = Field::of_size(q);
    for (int s = 0; s < 20; ++s) {
      const std::size_t n = 3 + rng() % 6, k = 1 + rng() % 3;
      Matrix m(F, k, n);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n; ++c) m.set(r, c, Elem{static_cast<std::uint32_t>(rng() % q)});
      if (rank(m) != k) continue;
      const GeneratorMatrix g(m);
      CHECK(weight_enumerator(g) == oracle::weight_distribution(g));
    }
  }
}

TEST_CASE("minimum distance engines agree with enumeration") {
  const auto F2 = Field::of_size(2);
  const auto full = circulant_matrix(Poly::constant(F2, F2->one()), 6);
  CHECK(min_distance(full).upper == 1);
  CHECK(min_distance(full).exact());
  const auto rep = circulant_matrix(parse_poly(F2, "[1111111]"), 7);
  CHECK(min_distance(rep).upper == 7);
  DistanceOptions info;
  info.strategy = DistanceOptions::Strategy::information_sets;
  CHECK(min_distance(rep, info).upper == 7);
  CHECK(min_distance(rep, info).exact());
  CHECK_THROWS_AS(min_distance(GeneratorMatrix(Matrix(F2, 0, 4))), RankError);

  DistanceOptions exh;
  exh.strategy = DistanceOptions::Strategy::exhaustive;
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto F = Field::of_size(q);
    for (std::size_t n = 3; n <= 26; ++n) {
      const auto t = CosetTable::make(F, n);
      try {
        (void)t->root();
      } catch (const std::out_of_range&) {
        continue;
      }
      const auto all = oracle::all_multisets(t);
      const std::size_t step = std::max<std::size_t>(1, all.size() / 12);
      for (std::size_t i = 0; i < all.size(); i += step) {
        const std::size_t k = n - all[i].size();
        if (k == 0 || std::pow(double(q), double(k)) > 5e4) continue;
        const auto g = circulant_matrix(coset_to_poly(all[i]), n);
        const std::size_t expected = oracle::min_distance(g);
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(format_multiset(all[i]));
        const auto a = min_distance(g, exh);
        const auto b = min_distance(g, info);
        CHECK(a.exact());
        CHECK(b.exact());
        CHECK(a.upper == expected);
        CHECK(b.upper == expected);
        CHECK(witness_valid(g, a));
        CHECK(witness_valid(g, b));
        UpperBoundOptions few;
        few.iterations = 50;
        const auto u = upper_bound_search(g, few);
        CHECK(u.upper >= expected);
        CHECK(witness_valid(g, u));
      }
    }
  }
}

TEST_CASE("budgeted runs report bounds, never a false exact claim") {
  const auto g = ternary_qc("[101]", "[1122220222021210022212]", "[1220021122022111]", 24);
  DistanceOptions opts;
  opts.strategy = DistanceOptions::Strategy::information_sets;
  opts.budget = 100000;
  const auto c = min_distance(g, opts);
  CHECK(c.budget_exhausted);
  CHECK_FALSE(c.exact());
  CHECK(c.lower <= 26);
  CHECK(c.upper >= 26);
  CHECK(witness_valid(g, c));
}

TEST_CASE("ternary QC code [60,19,22]") {
  const auto g = ternary_qc("[21]", "[2200021200110200111]", "[0012002212221102101]", 20);
  const auto c = min_distance(g);
  CHECK(c.exact());
  CHECK(c.upper == 22);
  CHECK(witness_valid(g, c));
  // Thread count does not change the result.
  DistanceOptions one;
  one.threads = 1;
  DistanceOptions three;
  three.threads = 3;
  const auto a = min_distance(g, one), b = min_distance(g, three);
  CHECK(a.upper == b.upper);
  CHECK(a.witness == b.witness);
}

TEST_CASE("shorten, puncture, extend") {
  const auto F2 = Field::of_size(2);
  const auto ham = circulant_matrix(parse_poly(F2, "[1101]"), 7);
  const auto ext = extend(ham);
  CHECK(ext.n() == 8);
  CHECK(ext.k() == 4);
  CHECK(oracle::min_distance(ext) == 4);
  CHECK(weight_enumerator(ext) == std::vector<std::uint64_t>{1, 0, 0, 0, 14, 0, 0, 0, 1});
  // Puncturing the even extension and re-extending restores it.
  const auto back = extend(puncture(ext, 7));
  CHECK(weight_enumerator(back) == weight_enumerator(ext));
  for (std::size_t pos = 0; pos < 7; ++pos) {
    const auto s = shorten(ham, pos);
    CHECK(s.n() == 6);
    CHECK(s.k() == 3);
    CHECK(oracle::min_distance(s) >= 3);
    const auto p = puncture(ham, pos);
    CHECK(p.k() == 4);
    CHECK(oracle::min_distance(p) >= 2);
  }
  CHECK_THROWS_AS(shorten(ham, 7), std::out_of_range);
  CHECK_THROWS_AS(shorten(circulant_matrix(parse_poly(F2, "[1111111]"), 7), 0), RankError);
  Matrix zc(F2, 2, 3);
  zc.set(0, 0, F2->one());
  zc.set(1, 1, F2->one());
  CHECK_THROWS_AS(shorten(GeneratorMatrix(zc), 2), RankError);

  const auto F3 = Field::of_size(3);
  const auto t = CosetTable::make(F3, 13);
  for (const auto& ms : oracle::all_multisets(t)) {
    if (ms.size() == 13 || ms.size() == 0) continue;
    const auto g = circulant_matrix(coset_to_poly(ms), 13);
    if (g.k() > 9) continue;
    const auto d = oracle::min_distance(g);
    CHECK(oracle::min_distance(extend(g)) >= d);
    if (g.k() >= 2) CHECK(oracle::min_distance(shorten(g, 0)) >= d);
    if (d > 1) CHECK(oracle::min_distance(puncture(g, 0)) >= d - 1);
  }
}

TEST_CASE("dual code") {
  const auto F2 = Field::of_size(2);
  const auto ham = circulant_matrix(parse_poly(F2, "[1101]"), 7);
  const auto d = dual(ham);
  CHECK(d.k() == 3);
  CHECK(oracle::min_distance(d) == 4);
}
