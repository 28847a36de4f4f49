#include <doctest.h>

#include "cyclequiv/cosets.hpp"
#include "oracles.hpp"

using namespace cyclequiv;

using Sets = std::vector<std::vector<std::size_t>>;

TEST_CASE("length split") {
  auto s = split_length(14, 2);
  CHECK(s.n_q == 7);
  CHECK(s.i == 1);
  CHECK(s.repeat == 2);
  s = split_length(7, 2);
  CHECK(s.n_q == 7);
  CHECK(s.i == 0);
  s = split_length(18, 3);
  CHECK(s.n_q == 2);
  CHECK(s.i == 2);
  CHECK(s.repeat == 9);
  // GF(4): the split is by the characteristic, 170 = 85 * 2.
  s = split_length(170, 4);
  CHECK(s.n_q == 85);
  CHECK(s.repeat == 2);
}

TEST_CASE("cyclotomic cosets") {
  CHECK(cyclotomic_cosets(7, 2) == Sets{{0}, {1, 2, 4}, {3, 5, 6}});
  CHECK(cyclotomic_cosets(8, 3) == Sets{{0}, {1, 3}, {2, 6}, {4}, {5, 7}});
  CHECK(cyclotomic_cosets(1, 5) == Sets{{0}});
  CHECK_THROWS_AS(cyclotomic_cosets(6, 3), std::invalid_argument);
  for (std::size_t n = 1; n <= 100; ++n) {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
      if (std::gcd<std::size_t>(n, q) != 1) continue;
      const auto cs = cyclotomic_cosets(n, q);
      std::vector<int> seen(n, 0);
      for (const auto& c : cs) {
        for (auto z : c) {
          ++seen[z];
          CHECK(std::binary_search(c.begin(), c.end(), (z * q) % n));
        }
      }
      CHECK(std::all_of(seen.begin(), seen.end(), [](int v) { return v == 1; }));
    }
  }
}

TEST_CASE("P map on the length-14 binary example") {
  const auto F2 = Field::of_size(2);
  const auto t = CosetTable::make(F2, 14);
  const auto ms1 = parse_multiset(t, "{1,2,4}^2");
  const auto ms2 = parse_multiset(t, "{3,5,6}^2");
  CHECK(coset_to_poly(ms1) == parse_poly(F2, "[1000101]"));  // x^6 + x^4 + 1
  CHECK(coset_to_poly(ms2) == parse_poly(F2, "[1010001]"));  // x^6 + x^2 + 1
  CHECK(coset_to_poly(parse_multiset(t, "{0}")) == parse_poly(F2, "[11]"));
  CHECK(poly_to_coset(parse_poly(F2, "[1000101]"), t) == ms1);
  CHECK(poly_to_coset(Poly::constant(F2, F2->one()), t) == CosetMultiset::empty(t));
  CHECK(poly_to_coset(Poly::x_n_minus_one(F2, 14), t) == CosetMultiset::full(t));
  CHECK_THROWS_AS(poly_to_coset(parse_poly(F2, "[111]"), t), std::invalid_argument);
  CHECK_THROWS_AS(CosetMultiset(t, {3, 0, 0}), std::invalid_argument);
}

TEST_CASE("P map properties") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto F = Field::of_size(q);
    for (std::size_t n = 1; n <= 64; ++n) {
      CAPTURE(q);
      CAPTURE(n);
      const auto t = CosetTable::make(F, n);
      try {
        (void)t->root();
      } catch (const std::out_of_range&) {
        continue;  // splitting field out of reach
      }
      // The full multiset is x^n - 1.
      CHECK(coset_to_poly(CosetMultiset::full(t)) == Poly::x_n_minus_one(F, n));
      // Each P(S) is irreducible: coprime to every other coset polynomial and
      // without factors of degree <= deg/2 (gcd with x^(q^j) - x).
      for (std::size_t j = 0; j < t->count(); ++j) {
        const auto& pj = t->coset_poly(j);
        CHECK(pj.degree() == static_cast<int>(t->coset(j).size()));
        CHECK(pj.is_monic());
        for (std::size_t k = j + 1; k < t->count(); ++k) CHECK(gcd(pj, t->coset_poly(k)).is_one());
        if (q <= 5 && pj.degree() <= 8) {
          Poly xp = Poly::x(F);
          for (int d = 1; 2 * d <= pj.degree(); ++d) {
            // xp <- xp^q mod pj, so xp = x^(q^d) mod pj
            Poly acc = Poly::constant(F, F->one());
            for (std::uint32_t r = 0; r < q; ++r) acc = divmod(acc * xp, pj).remainder;
            xp = acc;
            CHECK(gcd(xp - Poly::x(F), pj).is_one());
          }
        }
      }
      // Round trip and degree, exhaustively when small, otherwise on a prefix.
      const auto all = oracle::all_multisets(t);
      const std::size_t limit = std::min<std::size_t>(all.size(), 3000);
      for (std::size_t i = 0; i < limit; ++i) {
        const auto g = coset_to_poly(all[i]);
        CHECK(g.degree() == static_cast<int>(all[i].size()));
        CHECK(divides(g, Poly::x_n_minus_one(F, n)));
        CHECK(poly_to_coset(g, t) == all[i]);
      }
    }
  }
}

TEST_CASE("multiset grammar") {
  const auto t = CosetTable::make(Field::of_size(2), 14);
  const auto ms = parse_multiset(t, "{1,2,4}^2 + {0}");
  CHECK(ms.multiplicities() == std::vector<unsigned>{1, 2, 0});
  CHECK(format_multiset(ms) == "{0} + {1,2,4}^2");
  CHECK(parse_multiset(t, format_multiset(ms)) == ms);
  CHECK(parse_multiset(t, "{2}") == parse_multiset(t, "{1,2,4}"));
  CHECK(parse_multiset(t, "{}") == CosetMultiset::empty(t));
  CHECK(format_multiset(CosetMultiset::empty(t)) == "{}");
  CHECK(parse_generator(t, "[1000101]") == parse_multiset(t, "{1,2,4}^2"));
  CHECK_THROWS_AS(parse_multiset(t, "{1,2,4}^3"), std::invalid_argument);
  try {
    (void)parse_multiset(t, "{1,x}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  const auto t8 = CosetTable::make(Field::of_size(3), 8);
  CHECK(format_multiset(parse_multiset(t8, "{0,1,3,4}")) == "{0} + {1,3} + {4}");
  for (const auto& m : oracle::all_multisets(t8)) CHECK(parse_multiset(t8, format_multiset(m)) == m);
}

TEST_CASE("coset polynomials without log tables") {
  // Same root convention on both paths wherever the tables fit.
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    const auto F = Field::of_size(q);
    for (std::size_t n = 1; n <= 80; ++n) {
      if (n % q == 0) continue;
      const auto t = CosetTable::make(F, n);
      try {
        if (!t->root().extension) continue;  // only compare where the tables exist
      } catch (const std::out_of_range&) {
        continue;
      }
      CAPTURE(q);
      CAPTURE(n);
      const auto polys = coset_polynomials_by_quotient(*t);
      for (std::size_t j = 0; j < t->count(); ++j) CHECK(polys[j] == t->coset_poly(j));
    }
  }
  // Beyond the bound: binary length 29 (GF(2^28)) and ternary length 17 (GF(3^16)).
  // GF(4) length 23 needs GF(4^11): the table still enumerates, the polynomials throw.
  const auto t23 = CosetTable::make(Field::of_size(4), 23);
  CHECK(t23->count() == 3);
  CHECK_THROWS_AS(t23->coset_poly(0), std::out_of_range);
  CHECK_THROWS_AS(t23->coset_poly(0), std::out_of_range);
  for (auto [q, n] : {std::pair{2u, 29u}, std::pair{3u, 17u}, std::pair{2u, 59u}}) {
    const auto F = Field::of_size(q);
    const auto t = CosetTable::make(F, n);
    CHECK(t->root().extension == nullptr);
    CHECK(t->count() == 2);
    CHECK(coset_to_poly(CosetMultiset::full(t)) == Poly::x_n_minus_one(F, n));
    // The nontrivial coset gives 1 + x + ... + x^(n-1).
    CHECK(t->coset_poly(1) == Poly(F, std::vector<Elem>(n, F->one())));
  }
}
