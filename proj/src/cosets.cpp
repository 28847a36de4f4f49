#include "cyclequiv/cosets.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

namespace cyclequiv {

LengthSplit split_length(std::size_t n, std::uint32_t q) {
  if (n == 0) throw std::invalid_argument("split_length: n must be >= 1");
  const auto primes = prime_factors(q);
  if (primes.size() != 1) throw std::invalid_argument("split_length: q must be a prime power");
  LengthSplit s;
  s.n = n;
  s.q = q;
  s.p = static_cast<unsigned>(primes[0]);
  s.n_q = n;
  while (s.n_q % s.p == 0) {
    s.n_q /= s.p;
    ++s.i;
    s.repeat *= s.p;
  }
  return s;
}

std::vector<std::vector<std::size_t>> cyclotomic_cosets(std::size_t n_q, std::uint32_t q) {
  if (n_q == 0) throw std::invalid_argument("cyclotomic_cosets: modulus must be positive");
  if (std::gcd<std::size_t>(n_q, q) != 1)
    throw std::invalid_argument("cyclotomic_cosets: gcd(" + std::to_string(n_q) + ", " + std::to_string(q) + ") != 1");
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(n_q, false);
  for (std::size_t s = 0; s < n_q; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> c;
    std::size_t z = s;
    do {
      seen[z] = true;
      c.push_back(z);
      z = static_cast<std::size_t>((static_cast<unsigned __int128>(z) * q) % n_q);
    } while (z != s);
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

// Splitting fields beyond the table bound: same root convention as
// primitive_root_of_unity (least irreducible modulus, first primitive element
// g, alpha = g^((Q-1)/n)), but with GF(p^t) = GF(p)[y]/(M) and plain
// polynomial arithmetic. Only prime base fields take this path.
std::vector<Poly> coset_polys_by_quotient(const FieldPtr& field, std::size_t n_q, unsigned t,
                                          const std::vector<std::vector<std::size_t>>& cosets) {
  const unsigned p = field->characteristic();
  const auto M = prime_poly::least_irreducible(p, t);
  const auto g = prime_poly::first_primitive(p, M);
  std::uint64_t Q = 1;
  for (unsigned i = 0; i < t; ++i) Q *= p;
  const auto alpha = prime_poly::powmod(g, (Q - 1) / n_q, M, p);

  std::vector<Poly> out;
  out.reserve(cosets.size());
  for (const auto& c : cosets) {
    // Coefficients in X, each an element of GF(p)[y]/(M).
    std::vector<std::vector<unsigned>> prod = {{1}};
    for (auto s : c) {
      const auto beta = prime_poly::powmod(alpha, s, M, p);
      std::vector<std::vector<unsigned>> next(prod.size() + 1);
      for (std::size_t i = 0; i < prod.size(); ++i) {
        // next[i+1] += prod[i]; next[i] -= beta * prod[i]
        auto& hi = next[i + 1];
        hi.resize(std::max(hi.size(), prod[i].size()), 0);
        for (std::size_t j = 0; j < prod[i].size(); ++j) hi[j] = (hi[j] + prod[i][j]) % p;
        const auto bp = prime_poly::mulmod(beta, prod[i], M, p);
        auto& lo = next[i];
        lo.resize(std::max(lo.size(), bp.size()), 0);
        for (std::size_t j = 0; j < bp.size(); ++j) lo[j] = (lo[j] + p - bp[j]) % p;
      }
      for (auto& x : next) x = prime_poly::trim(std::move(x));
      prod = std::move(next);
    }
    std::vector<Elem> coeffs;
    for (const auto& x : prod) {
      if (x.size() > 1) throw std::logic_error("cosets: minimal polynomial has a coefficient outside GF(p)");
      coeffs.push_back(Elem{x.empty() ? 0u : x[0]});
    }
    out.emplace_back(field, std::move(coeffs));
  }
  return out;
}

bool fits_tables(const FieldPtr& field, std::size_t n_q) {
  const auto t = multiplicative_order(field->size() % n_q, n_q);
  std::uint64_t size = 1;
  for (std::uint64_t i = 0; i < t; ++i) {
    size *= field->size();
    if (size > kDefaultFieldBound) return false;
  }
  return true;
}

RootOfUnity root_for(const FieldPtr& field, std::size_t n_q) {
  if (fits_tables(field, n_q) || !field->is_prime()) return primitive_root_of_unity(field, n_q);
  RootOfUnity r;
  r.base = field;
  r.n = n_q;
  r.t = static_cast<unsigned>(multiplicative_order(field->size() % n_q, n_q));
  if (r.t * std::log2(double(field->size())) > 62)
    throw std::out_of_range("cosets: splitting field GF(" + std::to_string(field->size()) + "^" +
                            std::to_string(r.t) + ") is too large");
  return r;
}

}  // namespace

CosetTable::CosetTable(FieldPtr field, std::size_t n)
    : field_(std::move(field)),
      split_(split_length(n, field_->size())),
      cosets_(cyclotomic_cosets(split_.n_q, field_->size())),
      coset_of_(split_.n_q) {
  for (std::size_t j = 0; j < cosets_.size(); ++j)
    for (auto z : cosets_[j]) coset_of_[z] = j;
}

void CosetTable::build_algebra() const {
  // call_once rethrows and leaves the flag unset, so a failure repeats on the next call.
  std::call_once(built_, [this] {
    RootOfUnity root = root_for(field_, split_.n_q);
    std::vector<Poly> polys;
    if (!root.extension) {
      polys = coset_polys_by_quotient(field_, split_.n_q, root.t, cosets_);
    } else {
      const auto& E = *root.extension;
      polys.reserve(cosets_.size());
      for (const auto& c : cosets_) {
        Poly prod = Poly::constant(root.extension, E.one());
        for (auto s : c) {
          const Elem r = E.pow(root.alpha, static_cast<std::int64_t>(s));
          prod = prod * Poly(root.extension, {E.neg(r), E.one()});
        }
        // to_base throws std::logic_error if some coefficient is outside GF(q).
        polys.push_back(root.to_base(prod));
      }
    }
    root_ = std::move(root);
    polys_ = std::move(polys);
  });
}

const RootOfUnity& CosetTable::root() const {
  build_algebra();
  return root_;
}

const Poly& CosetTable::coset_poly(std::size_t j) const {
  build_algebra();
  return polys_.at(j);
}

std::vector<Poly> coset_polynomials_by_quotient(const CosetTable& t) {
  if (!t.field()->is_prime()) throw std::invalid_argument("coset_polynomials_by_quotient: prime fields only");
  return coset_polys_by_quotient(t.field(), t.n_q(), t.root().t, t.cosets());
}

CosetTablePtr CosetTable::make(FieldPtr field, std::size_t n) {
  return std::make_shared<const CosetTable>(std::move(field), n);
}

CosetMultiset::CosetMultiset(CosetTablePtr table, std::vector<unsigned> multiplicities)
    : table_(std::move(table)), mult_(std::move(multiplicities)) {
  if (mult_.size() != table_->count())
    throw std::invalid_argument("multiset: expected " + std::to_string(table_->count()) + " multiplicities, got " +
                                std::to_string(mult_.size()));
  for (auto m : mult_)
    if (m > table_->repeat())
      throw std::invalid_argument("multiset: multiplicity " + std::to_string(m) + " exceeds " +
                                  std::to_string(table_->repeat()));
}

CosetMultiset CosetMultiset::empty(CosetTablePtr table) {
  const auto k = table->count();
  return CosetMultiset(std::move(table), std::vector<unsigned>(k, 0));
}

CosetMultiset CosetMultiset::full(CosetTablePtr table) {
  const auto k = table->count();
  const auto r = table->repeat();
  return CosetMultiset(std::move(table), std::vector<unsigned>(k, r));
}

std::size_t CosetMultiset::size() const {
  std::size_t s = 0;
  for (std::size_t j = 0; j < mult_.size(); ++j) s += mult_[j] * table_->coset(j).size();
  return s;
}

std::vector<unsigned> CosetMultiset::element_multiplicities() const {
  std::vector<unsigned> out(table_->n_q(), 0);
  for (std::size_t j = 0; j < mult_.size(); ++j)
    for (auto z : table_->coset(j)) out[z] = mult_[j];
  return out;
}

Poly coset_to_poly(const CosetMultiset& ms) {
  const auto& t = *ms.table();
  Poly acc = Poly::constant(t.field(), t.field()->one());
  for (std::size_t j = 0; j < t.count(); ++j)
    if (ms.multiplicity(j) > 0) acc = acc * pow(t.coset_poly(j), ms.multiplicity(j));
  return acc;
}

CosetMultiset poly_to_coset(const Poly& g, const CosetTablePtr& table) {
  if (g.field() != table->field()) throw std::invalid_argument("poly_to_coset: polynomial over the wrong field");
  if (g.is_zero()) throw std::invalid_argument("poly_to_coset: zero polynomial");
  const Poly xn1 = Poly::x_n_minus_one(table->field(), table->n());
  Poly rest = g.monic();
  if (!divides(rest, xn1))
    throw std::invalid_argument("poly_to_coset: " + format_poly(g) + " does not divide x^" +
                                std::to_string(table->n()) + " - 1");
  std::vector<unsigned> mult(table->count(), 0);
  for (std::size_t j = 0; j < table->count(); ++j) {
    const Poly& f = table->coset_poly(j);
    while (rest.degree() >= f.degree()) {
      auto dm = divmod(rest, f);
      if (!dm.remainder.is_zero()) break;
      rest = std::move(dm.quotient);
      ++mult[j];
    }
  }
  if (!rest.is_one()) throw std::logic_error("poly_to_coset: leftover factor " + format_poly(rest));
  return CosetMultiset(table, std::move(mult));
}

std::string format_multiset(const CosetMultiset& ms) {
  const auto& t = *ms.table();
  std::string out;
  for (std::size_t j = 0; j < t.count(); ++j) {
    const unsigned m = ms.multiplicity(j);
    if (m == 0) continue;
    if (!out.empty()) out += " + ";
    out += '{';
    for (std::size_t k = 0; k < t.coset(j).size(); ++k) {
      if (k > 0) out += ',';
      out += std::to_string(t.coset(j)[k]);
    }
    out += '}';
    if (m > 1) out += '^' + std::to_string(m);
  }
  return out.empty() ? "{}" : out;
}

CosetMultiset parse_multiset(const CosetTablePtr& table, std::string_view text) {
  const auto& t = *table;
  std::vector<unsigned> mult(t.count(), 0);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](const char* what) {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError(std::string("multiset: expected ") + what, pos);
    std::size_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
      if (v > (std::size_t{1} << 40)) throw ParseError("multiset: number too large", pos);
      ++pos;
    }
    return v;
  };

  bool any_term = false;
  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] != '{') throw ParseError("multiset: expected '{'", pos);
    ++pos;
    std::vector<bool> touched(t.count(), false);
    skip_ws();
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
    } else {
      while (true) {
        const std::size_t at = pos;
        const std::size_t z = read_int("a residue");
        if (z >= t.n_q())
          throw ParseError("multiset: residue " + std::to_string(z) + " is not below n_q = " + std::to_string(t.n_q()),
                           at);
        touched[t.coset_of(z)] = true;
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == '}') {
          ++pos;
          break;
        }
        throw ParseError("multiset: expected ',' or '}'", pos);
      }
    }
    unsigned k = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const std::size_t at = pos;
      const auto v = read_int("a multiplicity");
      if (v > t.repeat())
        throw ParseError("multiset: multiplicity " + std::to_string(v) + " exceeds " + std::to_string(t.repeat()), at);
      k = static_cast<unsigned>(v);
    }
    for (std::size_t j = 0; j < t.count(); ++j) {
      if (!touched[j]) continue;
      mult[j] += k;
      if (mult[j] > t.repeat())
        throw ParseError("multiset: coset {" + std::to_string(t.coset(j)[0]) + ",...} exceeds multiplicity " +
                             std::to_string(t.repeat()),
                         pos);
    }
    any_term = true;
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '+') throw ParseError("multiset: expected '+'", pos);
    ++pos;
  }
  if (!any_term) throw ParseError("multiset: empty input", 0);
  return CosetMultiset(table, std::move(mult));
}

CosetMultiset parse_generator(const CosetTablePtr& table, std::string_view text) {
  std::size_t k = 0;
  while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
  if (k < text.size() && text[k] == '[') return poly_to_coset(parse_poly(table->field(), text), table);
  return parse_multiset(table, text);
}

}  // namespace cyclequiv
