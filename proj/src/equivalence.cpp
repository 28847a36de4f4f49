#include "cyclequiv/equivalence.hpp"

#include <algorithm>
#include <numeric>

namespace cyclequiv {

std::string to_string(Mode m) { return m == Mode::strict ? "strict" : "literal"; }

Mode parse_mode(std::string_view s) {
  if (s == "strict") return Mode::strict;
  if (s == "literal") return Mode::literal;
  throw std::invalid_argument("unknown mode '" + std::string(s) + "' (expected strict or literal)");
}

std::string to_string(EquivStatus s) {
  switch (s) {
    case EquivStatus::equivalent: return "equivalent";
    case EquivStatus::unknown: return "unknown";
    case EquivStatus::inequivalent: return "inequivalent";
  }
  return "?";
}

std::string to_string(BruteForceResult r) {
  switch (r) {
    case BruteForceResult::equivalent: return "equivalent";
    case BruteForceResult::not_equivalent: return "not-equivalent";
    case BruteForceResult::exhausted: return "exhausted";
  }
  return "?";
}

PreparedMultiset::PreparedMultiset(const CosetMultiset& ms)
    : n_q(ms.table()->n_q()), size(ms.size()), mult(ms.element_multiplicities()) {
  for (std::size_t z = 0; z < mult.size(); ++z)
    if (mult[z] > 0) support.push_back(z);
}

AffineSearchPlan::AffineSearchPlan(std::size_t nq, std::uint32_t field_size) : n_q(nq), q(field_size) {
  if (n_q == 1) {
    multipliers.push_back(1);
    return;
  }
  for (std::size_t u = 1; u < n_q; ++u) {
    if (std::gcd(u, n_q) != 1) continue;
    // e and e*q induce the same image of any q-closed set, so one u per class suffices.
    bool least = true;
    for (std::size_t v = (u * q) % n_q; v != u; v = (v * q) % n_q)
      if (v < u) {
        least = false;
        break;
      }
    if (least) multipliers.push_back(static_cast<std::size_t>(inverse_mod(static_cast<std::int64_t>(u),
                                                                          static_cast<std::int64_t>(n_q))));
  }
}

std::optional<AffineWitness> affine_equivalent(const PreparedMultiset& a, const PreparedMultiset& b,
                                               const AffineSearchPlan& plan, Mode mode, OpCounter* counter) {
  if (a.n_q != b.n_q || a.n_q != plan.n_q) throw std::invalid_argument("affine_equivalent: mismatched coset tables");
  std::uint64_t ops = 1;
  auto done = [&](std::optional<AffineWitness> w) {
    if (counter) counter->ops += ops;
    return w;
  };
  if (a.size != b.size) return done(std::nullopt);
  if (a.support.empty()) return done(AffineWitness{1, 0});
  const std::size_t n = a.n_q;
  const std::size_t z0 = a.support.front();
  const unsigned mu0 = a.mult[z0];
  const std::uint64_t gate = static_cast<std::uint64_t>(a.size) * (plan.q - 1);
  std::vector<std::size_t> shifts;
  shifts.reserve(b.support.size());
  for (const std::size_t e : plan.multipliers) {
    shifts.clear();
    const std::size_t ez0 = (e * z0) % n;
    for (auto w : b.support) {
      ++ops;
      if (b.mult[w] == mu0) shifts.push_back((w + n - ez0) % n);
    }
    std::sort(shifts.begin(), shifts.end());
    for (const std::size_t t : shifts) {
      ++ops;
      if (mode == Mode::strict && t != 0 && (static_cast<std::uint64_t>(t) * gate) % n != 0) continue;
      bool ok = true;
      for (auto z : a.support) {
        ++ops;
        if (b.mult[(e * z + t) % n] != a.mult[z]) {
          ok = false;
          break;
        }
      }
      if (ok) return done(AffineWitness{e, t});
    }
  }
  return done(std::nullopt);
}

std::optional<AffineWitness> affine_equivalent(const CosetMultiset& a, const CosetMultiset& b, Mode mode,
                                               OpCounter* counter) {
  if (a.table() != b.table()) {
    if (a.table()->n_q() != b.table()->n_q() || a.table()->field() != b.table()->field() ||
        a.table()->n() != b.table()->n())
      throw std::invalid_argument("affine_equivalent: multisets over different coset tables");
  }
  const AffineSearchPlan plan(*a.table());
  return affine_equivalent(PreparedMultiset(a), PreparedMultiset(b), plan, mode, counter);
}

std::vector<unsigned> apply_affine(const std::vector<unsigned>& element_mult, const AffineWitness& w) {
  const std::size_t n = element_mult.size();
  std::vector<unsigned> out(n, 0);
  for (std::size_t z = 0; z < n; ++z) out[(w.e * z + w.b) % n] += element_mult[z];
  return out;
}

AffineWitness inverse(const AffineWitness& w, std::size_t n_q) {
  if (n_q == 1) return {1, 0};
  const auto ei = static_cast<std::size_t>(inverse_mod(static_cast<std::int64_t>(w.e), static_cast<std::int64_t>(n_q)));
  return {ei, (n_q - (ei * w.b) % n_q) % n_q};
}

AffineWitness compose(const AffineWitness& first, const AffineWitness& second, std::size_t n_q) {
  if (n_q == 1) return {1, 0};
  // second(first(z)) = e2 (e1 z + b1) + b2
  return {(second.e * first.e) % n_q, (second.e * first.b + second.b) % n_q};
}

EquivVerdict verdict(const CosetMultiset& a, const CosetMultiset& b, Mode mode) {
  EquivVerdict v;
  v.mode = mode;
  v.witness = affine_equivalent(a, b, mode);
  if (v.witness) {
    v.status = EquivStatus::equivalent;
  } else if (a.size() != b.size() || a.table()->field()->size() == 2) {
    v.status = EquivStatus::inequivalent;
  } else {
    v.status = EquivStatus::unknown;
  }
  return v;
}

std::vector<Elem> apply_monomial(std::span<const Elem> v, const Monomial& m, const Field& f) {
  std::vector<Elem> out(v.size(), f.zero());
  for (std::size_t i = 0; i < v.size(); ++i) out[m.perm[i]] = f.mul(m.scale[i], v[i]);
  return out;
}

Matrix to_matrix(const Monomial& m, const FieldPtr& f) {
  Matrix out(f, m.perm.size(), m.perm.size());
  for (std::size_t i = 0; i < m.perm.size(); ++i) out.set(i, m.perm[i], m.scale[i]);
  return out;
}

bool maps_into(const GeneratorMatrix& a, const Matrix& mat, const GeneratorMatrix& b) {
  if (mat.rows() != a.n() || mat.cols() != b.n()) throw std::invalid_argument("maps_into: dimension mismatch");
  for (std::size_t r = 0; r < a.k(); ++r)
    if (!b.contains(vec_mul(a.matrix().row(r), mat))) return false;
  return true;
}

BruteForceOutcome brute_force_equivalent(const GeneratorMatrix& a, const GeneratorMatrix& b, std::uint64_t cap,
                                         bool with_automorphisms) {
  if (a.field() != b.field() || a.n() != b.n() || a.k() != b.k())
    throw std::invalid_argument("brute_force_equivalent: codes differ in field, length or dimension");
  const auto& F = *a.field();
  const std::size_t n = a.n();
  BruteForceOutcome out;

  unsigned __int128 space = 1;
  for (std::size_t i = 2; i <= n; ++i) space *= i;
  for (std::size_t i = 1; i < n; ++i) space *= F.size() - 1;
  if (with_automorphisms) space *= F.degree();
  if (space > cap) return out;

  if (a.k() == 0 || a.k() == n) {
    out.result = BruteForceResult::equivalent;
    out.map = Monomial{std::vector<std::size_t>(n), std::vector<Elem>(n, F.one())};
    std::iota(out.map->perm.begin(), out.map->perm.end(), 0);
    return out;
  }

  const Matrix h = null_space(b.matrix());
  const std::size_t r = h.rows();
  const unsigned frob_count = with_automorphisms ? F.degree() : 1;
  for (unsigned frob = 0; frob < frob_count; ++frob) {
    // Rows of a, after applying x -> x^(p^frob) entrywise.
    Matrix rows = a.matrix();
    const std::int64_t pe = static_cast<std::int64_t>(ipow(F.characteristic(), frob));
    for (std::size_t i = 0; i < rows.rows(); ++i)
      for (std::size_t c = 0; c < n; ++c) rows.set(i, c, F.pow(rows.at(i, c), pe));

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Elem> scale(n, F.one());
    do {
      // Scalars: scale[0] = 1 (a global scalar fixes the code), others run over GF(q)*.
      std::vector<std::uint32_t> logs(n, 0);
      while (true) {
        ++out.candidates;
        bool ok = true;
        for (std::size_t row = 0; row < rows.rows() && ok; ++row) {
          for (std::size_t j = 0; j < r && ok; ++j) {
            Elem s = F.zero();
            for (std::size_t i = 0; i < n; ++i) {
              const Elem x = rows.at(row, i);
              if (x.v == 0) continue;
              s = F.add(s, F.mul(F.mul(scale[i], x), h.at(j, perm[i])));
            }
            ok = s.v == 0;
          }
        }
        if (ok) {
          out.result = BruteForceResult::equivalent;
          out.map = Monomial{perm, scale};
          return out;
        }
        std::size_t i = 1;
        while (i < n) {
          if (++logs[i] < F.size() - 1) {
            scale[i] = F.exp(logs[i]);
            break;
          }
          logs[i] = 0;
          scale[i] = F.one();
          ++i;
        }
        if (i >= n) break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  out.result = BruteForceResult::not_equivalent;
  return out;
}

}  // namespace cyclequiv
