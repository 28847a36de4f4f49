// Independent reference implementations used to check the library. They are
// deliberately naive: no search plans, no anchors, no Gray codes.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "cyclequiv/codes.hpp"
#include "cyclequiv/cosets.hpp"

namespace oracle {

inline bool translation_allowed(std::size_t b, std::size_t n_q, std::size_t size, std::uint32_t q, bool strict) {
  if (!strict || b == 0) return true;
  return (static_cast<std::uint64_t>(b) * size * (q - 1)) % n_q == 0;
}

inline std::vector<unsigned> image(const std::vector<unsigned>& mult, std::size_t e, std::size_t b) {
  const std::size_t n = mult.size();
  std::vector<unsigned> out(n, 0);
  for (std::size_t z = 0; z < n; ++z) out[(e * z + b) % n] += mult[z];
  return out;
}

inline std::size_t total(const std::vector<unsigned>& mult) {
  return std::accumulate(mult.begin(), mult.end(), std::size_t{0});
}

// Is some z -> e z + b (e a unit, b allowed) sending a onto b?
inline bool affine_related(const std::vector<unsigned>& a, const std::vector<unsigned>& b, std::uint32_t q,
                           bool strict) {
  const std::size_t n = a.size();
  if (total(a) != total(b)) return false;
  for (std::size_t e = 1; e <= std::max<std::size_t>(n - 1, 1); ++e) {
    if (std::gcd(e, n) != 1) continue;
    for (std::size_t t = 0; t < n; ++t)
      if (translation_allowed(t, n, total(a), q, strict) && image(a, e, t) == b) return true;
  }
  return false;
}

// Least image over all allowed affine maps: equal exactly for related multisets,
// because the allowed maps form a group.
inline std::vector<unsigned> canonical_form(const std::vector<unsigned>& a, std::uint32_t q, bool strict) {
  const std::size_t n = a.size();
  std::vector<unsigned> best = a;
  for (std::size_t e = 1; e <= std::max<std::size_t>(n - 1, 1); ++e) {
    if (std::gcd(e, n) != 1) continue;
    for (std::size_t t = 0; t < n; ++t) {
      if (!translation_allowed(t, n, total(a), q, strict)) continue;
      auto im = image(a, e, t);
      if (im < best) best = std::move(im);
    }
  }
  return best;
}

// All nonempty multisets of a table in mixed-radix order.
inline std::vector<cyclequiv::CosetMultiset> all_multisets(const cyclequiv::CosetTablePtr& t) {
  std::vector<cyclequiv::CosetMultiset> out;
  std::vector<unsigned> m(t->count(), 0);
  while (true) {
    std::size_t j = 0;
    while (j < m.size() && m[j] == t->repeat()) m[j++] = 0;
    if (j == m.size()) break;
    ++m[j];
    out.emplace_back(t, m);
  }
  return out;
}

// Weight distribution by plain enumeration of all q^k messages.
inline std::vector<std::uint64_t> weight_distribution(const cyclequiv::GeneratorMatrix& g) {
  const auto& F = *g.field();
  std::vector<std::uint64_t> a(g.n() + 1, 0);
  std::vector<cyclequiv::Elem> msg(g.k(), F.zero());
  while (true) {
    ++a[cyclequiv::weight(g.encode(msg))];
    std::size_t i = 0;
    while (i < msg.size()) {
      if (msg[i].v + 1 < F.size()) {
        msg[i].v += 1;
        break;
      }
      msg[i].v = 0;
      ++i;
    }
    if (i == msg.size()) break;
  }
  return a;
}

inline std::size_t min_distance(const cyclequiv::GeneratorMatrix& g) {
  const auto a = weight_distribution(g);
  for (std::size_t w = 1; w < a.size(); ++w)
    if (a[w]) return w;
  return 0;
}

// First-seen partition with plain all-pairs comparison.
inline std::vector<std::size_t> naive_partition(const std::vector<cyclequiv::CosetMultiset>& all, std::uint32_t q,
                                                bool strict, std::vector<std::size_t>* reps_out = nullptr) {
  std::vector<std::size_t> reps, cls(all.size());
  std::vector<std::vector<unsigned>> elems;
  for (const auto& m : all) elems.push_back(m.element_multiplicities());
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::size_t c = reps.size();
    for (std::size_t r = 0; r < reps.size(); ++r)
      if (affine_related(elems[reps[r]], elems[i], q, strict)) {
        c = r;
        break;
      }
    if (c == reps.size()) reps.push_back(i);
    cls[i] = c;
  }
  if (reps_out) *reps_out = reps;
  return cls;
}

}  // namespace oracle
