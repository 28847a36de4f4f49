#include <doctest.h>

#include <sstream>

#include "cyclequiv/search.hpp"

using namespace cyclequiv;

namespace {

const char* kQC60[] = {"[21]", "[2200021200110200111]", "[0012002212221102101]"};

Construction qc60() {
  return parse_construction(Field::of_size(3), "qc:m=20,ell=3", {kQC60[0], kQC60[1], kQC60[2]});
}

}  // namespace

TEST_CASE("best-known table") {
  std::istringstream in("# comment\n2 7 4 3\n3 60 19 22  # trailing\n\n");
  const auto t = BKLCTable::load(in);
  CHECK(t.size() == 2);
  CHECK(t.lookup(2, 7, 4) == 3u);
  CHECK(t.lookup(3, 60, 19) == 22u);
  CHECK_FALSE(t.lookup(3, 60, 18));
  std::istringstream bad("2 7 x 3\n");
  CHECK_THROWS(BKLCTable::load(bad));
  CHECK_THROWS(BKLCTable::load_file("/nonexistent/bklc.txt"));
}

TEST_CASE("construction chains round trip") {
  const auto F3 = Field::of_size(3);
  const auto c = qc60().then({Construction::Op::shorten, 0}).then({Construction::Op::extend, 0});
  CHECK(c.chain() == "qc:m=20,ell=3>shorten@0>extend");
  CHECK(c.polys_text() == "[21] [2200021200110200111] [0012002212221102101]");
  std::vector<std::string> polys{kQC60[0], kQC60[1], kQC60[2]};
  const auto back = parse_construction(F3, c.chain(), polys);
  CHECK(back.chain() == c.chain());
  CHECK(back.steps == c.steps);
  const auto m = back.build();
  CHECK(m.n() == 60);
  CHECK(m.k() == 18);

  const auto chk = parse_construction(Field::of_size(2), "check:n=7", {"[1101]"});
  CHECK(chk.build().k() == 3);
  CHECK_THROWS(parse_construction(F3, "qc:m=20,ell=3", {"[21]"}));
  CHECK_THROWS(parse_construction(F3, "cyclic:n=8>rotate@1", {"[21]"}));
  CHECK_THROWS(parse_construction(F3, "bogus:n=8", {"[21]"}));
}

TEST_CASE("binary length-7 sweep") {
  std::istringstream in("2 7 1 7\n2 7 3 4\n2 7 4 3\n2 7 6 2\n2 7 7 1\n");
  const auto bklc = BKLCTable::load(in);
  SearchConfig cfg;
  cfg.field = Field::of_size(2);
  cfg.n = 7;
  cfg.bklc = &bklc;
  const auto recs = cyclic_sweep(cfg);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> got;
  for (const auto& r : recs) {
    CHECK(r.cert.exact());
    CHECK(r.status == BKLCStatus::matches);
    got.emplace_back(r.n, r.k, r.d());
  }
  using T = std::tuple<std::size_t, std::size_t, std::size_t>;
  CHECK(got == std::vector<T>{T{7, 6, 2}, T{7, 4, 3}, T{7, 3, 4}, T{7, 1, 7}});

  cfg.kmin = 5;
  cfg.kmax = 5;
  CHECK(cyclic_sweep(cfg).empty());
}

TEST_CASE("quasi-cyclic search edge cases") {
  SearchConfig cfg;
  cfg.field = Field::of_size(3);
  cfg.n = 8;
  cfg.ell = 2;
  cfg.trials = 0;
  CHECK(asr_search(cfg).empty());
  cfg.ell = 1;
  cfg.trials = 1;
  CHECK_THROWS_AS(asr_search(cfg), std::invalid_argument);
}

TEST_CASE("forced construction and determinism") {
  SearchConfig cfg;
  cfg.field = Field::of_size(3);
  cfg.n = 20;
  cfg.ell = 3;
  cfg.kmin = 19;
  cfg.kmax = 19;
  cfg.trials = 2;
  cfg.seed = 5;
  cfg.forced = {qc60()};
  const auto a = asr_search(cfg);
  REQUIRE_FALSE(a.empty());
  bool found = false;
  for (const auto& r : a) {
    CHECK(r.k == 19);
    if (!r.seed) {
      found = true;
      CHECK(r.n == 60);
      CHECK(r.cert.exact());
      CHECK(r.d() == 22);
    }
  }
  CHECK(found);
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].d() >= a[i].d());
  const auto b = asr_search(cfg);
  std::ostringstream sa, sb;
  write_records(sa, a, "asr");
  write_records(sb, b, "asr");
  CHECK(sa.str() == sb.str());
}

TEST_CASE("random multipliers are coprime to the check polynomial") {
  const auto F3 = Field::of_size(3);
  const auto g = parse_poly(F3, "[21]");
  const auto h = divmod(Poly::x_n_minus_one(F3, 20), g).quotient;
  for (std::uint64_t t = 0; t < 50; ++t) {
    const auto f = draw_multiplier(F3, 20, h, 9, 0, t, 1);
    CHECK_FALSE(f.is_zero());
    CHECK(f.degree() < 20);
    CHECK(gcd(f, h).is_one());
    CHECK(f == draw_multiplier(F3, 20, h, 9, 0, t, 1));
  }
  CHECK(draw_multiplier(F3, 20, h, 9, 0, 0, 1) != draw_multiplier(F3, 20, h, 9, 0, 0, 2));
}

TEST_CASE("derived neighbours") {
  const auto parent = certify(qc60(), {}, nullptr);
  REQUIRE(parent.cert.exact());
  DeriveOptions opts;
  opts.puncture = false;
  opts.extend = false;
  const auto kids = derive_neighbors(parent, nullptr, opts);
  // One shortening per block orbit: positions 0, m, 2m.
  REQUIRE(kids.size() == 3);
  CHECK(kids[0].construction.chain() == "qc:m=20,ell=3>shorten@0");
  CHECK(kids[1].construction.chain() == "qc:m=20,ell=3>shorten@20");
  CHECK(kids[2].construction.chain() == "qc:m=20,ell=3>shorten@40");
  CHECK(kids[0].n == 59);
  CHECK(kids[0].k == 18);
  CHECK(kids[0].cert.exact());
  CHECK(kids[0].d() == 22);
  opts.orbit_representatives = false;
  opts.positions = {5};
  const auto one = derive_neighbors(parent, nullptr, opts);
  REQUIRE(one.size() == 1);
  CHECK(one[0].construction.chain() == "qc:m=20,ell=3>shorten@5");

  // A one-dimensional code has no nonzero shortening.
  const auto rep = certify(parse_construction(Field::of_size(2), "cyclic:n=5", {"[11111]"}), {}, nullptr);
  DeriveOptions only_shorten;
  only_shorten.puncture = false;
  only_shorten.extend = false;
  CHECK(derive_neighbors(rep, nullptr, only_shorten).empty());
}

TEST_CASE("record format") {
  std::istringstream in("3 60 19 22\n");
  const auto bklc = BKLCTable::load(in);
  const auto r = certify(qc60(), {}, &bklc);
  CHECK(r.status == BKLCStatus::matches);
  CHECK(format_record(r) ==
        "3 60 19 22 exact - qc:m=20,ell=3 [21] [2200021200110200111] [0012002212221102101] bklc=22 status=matches");
  CHECK(to_string(BKLCStatus::beats) == "new");
}
