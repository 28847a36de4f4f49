#include "cyclequiv/distance.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "byte_field.hpp"

namespace cyclequiv {

std::string to_string(DistanceMethod m) {
  switch (m) {
    case DistanceMethod::exhaustive: return "exhaustive";
    case DistanceMethod::information_sets: return "information-sets";
    case DistanceMethod::random_information_sets: return "random-information-sets";
    case DistanceMethod::inherited: return "inherited";
  }
  return "?";
}

unsigned worker_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CYCLEQUIV_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

using detail::ByteField;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (static_cast<unsigned __int128>(1) << 62)) return std::uint64_t{1} << 62;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  return r > (static_cast<unsigned __int128>(1) << 62) ? std::uint64_t{1} << 62 : static_cast<std::uint64_t>(r);
}

std::uint64_t sat_pow(std::uint64_t a, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r = sat_mul(r, a);
  return r;
}

// Number of projective information vectors of weight w over k positions.
std::uint64_t unit_cost(std::size_t k, unsigned w, unsigned q) {
  if (w == 0) return 0;
  return sat_mul(binomial(k, w), sat_pow(q - 1, w - 1));
}

// Rows of a k x n matrix as bytes, each padded to `stride`, plus all nonzero
// scalar multiples of every row.
struct RowSet {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t stride = 0;
  unsigned q = 0;
  std::vector<std::uint8_t> scaled;  // ((r * (q-1)) + (c-1)) * stride

  const std::uint8_t* row(std::size_t r, unsigned c) const { return scaled.data() + (r * (q - 1) + (c - 1)) * stride; }
};

RowSet make_rowset(const ByteField& bf, const std::vector<std::uint8_t>& rows, std::size_t k, std::size_t n,
                   std::size_t stride) {
  RowSet rs{k, n, stride, bf.q(), {}};
  rs.scaled.assign(k * (bf.q() - 1) * stride, 0);
  for (std::size_t r = 0; r < k; ++r)
    for (unsigned c = 1; c < bf.q(); ++c) {
      auto* dst = rs.scaled.data() + (r * (bf.q() - 1) + (c - 1)) * stride;
      for (std::size_t i = 0; i < n; ++i) dst[i] = bf.mul(static_cast<std::uint8_t>(c), rows[r * stride + i]);
    }
  return rs;
}

// Best codewords seen by one worker: minimum weight, lexicographically least
// witness among those, plus optional extra witnesses of that weight.
struct Tracker {
  unsigned best;
  std::vector<std::uint8_t> witness;
  std::vector<std::vector<std::uint8_t>> extras;
  std::size_t max_extras = 0;
  std::uint64_t examined = 0;

  Tracker(unsigned initial, std::size_t extras_cap) : best(initial), max_extras(extras_cap) {}

  void offer(unsigned w, const std::uint8_t* cw, std::size_t n) {
    if (w < best) {
      best = w;
      witness.assign(cw, cw + n);
      extras.clear();
      if (max_extras > 0) extras.emplace_back(cw, cw + n);
      return;
    }
    if (w != best) return;
    if (max_extras > 0 && extras.size() < max_extras) extras.emplace_back(cw, cw + n);
    if (witness.empty() || std::lexicographical_compare(cw, cw + n, witness.begin(), witness.end()))
      witness.assign(cw, cw + n);
  }

  void merge(const Tracker& o) {
    if (o.witness.empty()) {
      examined += o.examined;
      return;
    }
    if (o.best < best || witness.empty()) {
      best = o.best;
      witness = o.witness;
      extras = o.extras;
    } else if (o.best == best) {
      if (o.witness < witness) witness = o.witness;
      for (const auto& e : o.extras) {
        if (extras.size() >= max_extras) break;
        extras.push_back(e);
      }
    }
    examined += o.examined;
  }
};

// Enumerates every projective combination of exactly w rows (the first chosen
// row has coefficient 1) whose first row index is congruent to `lane` modulo
// `lanes`, offering codewords of weight <= tracker.best.
class Enumerator {
 public:
  Enumerator(const ByteField& bf, const RowSet& rs, unsigned w, Tracker& t)
      : bf_(bf), rs_(rs), w_(w), t_(t), buf_(static_cast<std::size_t>(w) * rs.stride, 0),
        tmp_(rs.stride, 0), zero_(rs.stride, 0) {}

  void run(std::size_t lane, std::size_t lanes) {
    if (w_ == 0 || w_ > rs_.k) return;
    for (std::size_t i = lane; i + w_ <= rs_.k; i += lanes) {
      if (w_ == 1) {
        leaf(zero_.data(), rs_.row(i, 1));
      } else {
        std::copy_n(rs_.row(i, 1), rs_.stride, buf_.data());
        descend(1, i + 1, buf_.data());
      }
    }
  }

 private:
  void leaf(const std::uint8_t* partial, const std::uint8_t* row) {
    ++t_.examined;
    const unsigned wt = bf_.weight_of_sum(partial, row, rs_.n);
    if (wt <= t_.best && wt > 0) {
      bf_.add_rows(tmp_.data(), partial, row, rs_.n);
      t_.offer(wt, tmp_.data(), rs_.n);
    }
  }

  void descend(unsigned depth, std::size_t start, const std::uint8_t* partial) {
    const unsigned q = rs_.q;
    if (depth + 1 == w_) {
      for (std::size_t i = start; i < rs_.k; ++i)
        for (unsigned c = 1; c < q; ++c) leaf(partial, rs_.row(i, c));
      return;
    }
    std::uint8_t* next = buf_.data() + static_cast<std::size_t>(depth) * rs_.stride;
    for (std::size_t i = start; i + (w_ - depth) <= rs_.k; ++i)
      for (unsigned c = 1; c < q; ++c) {
        bf_.add_rows(next, partial, rs_.row(i, c), rs_.n);
        descend(depth + 1, i + 1, next);
      }
  }

  const ByteField& bf_;
  const RowSet& rs_;
  unsigned w_;
  Tracker& t_;
  std::vector<std::uint8_t> buf_;
  std::vector<std::uint8_t> tmp_;
  std::vector<std::uint8_t> zero_;
};

void run_unit(const ByteField& bf, const RowSet& rs, unsigned w, Tracker& tracker, unsigned threads) {
  if (threads <= 1 || rs.k < 2 * threads) {
    Enumerator(bf, rs, w, tracker).run(0, 1);
    return;
  }
  std::vector<Tracker> local(threads, Tracker(tracker.best, tracker.max_extras));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] { Enumerator(bf, rs, w, local[t]).run(t, threads); });
  for (auto& th : pool) th.join();
  for (const auto& l : local) tracker.merge(l);
}

// Byte-level Gauss-Jordan with pivots chosen greedily in `order`; rows are
// permuted so that row r has its pivot at pivots[r]. Returns the pivots.
std::vector<std::size_t> byte_rref(const ByteField& bf, std::vector<std::uint8_t>& a, std::size_t k, std::size_t n,
                                   std::size_t stride, std::span<const std::size_t> order) {
  std::vector<std::size_t> pivots;
  std::vector<std::uint8_t> scaled(n);
  std::size_t r = 0;
  for (auto c : order) {
    if (r == k) break;
    std::size_t sel = r;
    while (sel < k && a[sel * stride + c] == 0) ++sel;
    if (sel == k) continue;
    if (sel != r) std::swap_ranges(a.begin() + sel * stride, a.begin() + sel * stride + n, a.begin() + r * stride);
    std::uint8_t* pr = a.data() + r * stride;
    const std::uint8_t inv = bf.inv(pr[c]);
    if (inv != 1)
      for (std::size_t x = 0; x < n; ++x) pr[x] = bf.mul(inv, pr[x]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == r) continue;
      std::uint8_t* pi = a.data() + i * stride;
      const std::uint8_t f = pi[c];
      if (f == 0) continue;
      const std::uint8_t nf = bf.neg(f);
      for (std::size_t x = 0; x < n; ++x) scaled[x] = bf.mul(nf, pr[x]);
      bf.add_into(pi, scaled.data(), n);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::uint8_t> to_bytes(const GeneratorMatrix& m, std::size_t stride) {
  std::vector<std::uint8_t> out(m.k() * stride, 0);
  for (std::size_t r = 0; r < m.k(); ++r)
    for (std::size_t c = 0; c < m.n(); ++c) out[r * stride + c] = static_cast<std::uint8_t>(m.matrix().at(r, c).v);
  return out;
}

std::vector<Elem> to_elems(const std::vector<std::uint8_t>& v) {
  std::vector<Elem> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Elem{v[i]};
  return out;
}

void finish(DistanceCertificate& cert, const Tracker& t, std::size_t n) {
  cert.upper = t.best;
  cert.witness = to_elems(t.witness);
  cert.witness.resize(n);
  auto extras = t.extras;
  std::sort(extras.begin(), extras.end());
  extras.erase(std::unique(extras.begin(), extras.end()), extras.end());
  for (const auto& e : extras) {
    auto v = to_elems(e);
    v.resize(n);
    cert.extra_witnesses.push_back(std::move(v));
  }
  cert.codewords_examined = t.examined;
}

DistanceCertificate exhaustive_distance(const GeneratorMatrix& m, const DistanceOptions& opts) {
  const auto& F = *m.field();
  ByteField bf(F);
  const std::size_t n = m.n();
  const unsigned p = F.characteristic();
  std::vector<std::vector<std::uint8_t>> rows;
  for (std::size_t i = 0; i < m.k(); ++i)
    for (unsigned j = 0; j < F.degree(); ++j) {
      const auto basis = static_cast<std::uint8_t>(ipow(p, j));
      std::vector<std::uint8_t> r(n);
      for (std::size_t c = 0; c < n; ++c) r[c] = bf.mul(basis, static_cast<std::uint8_t>(m.matrix().at(i, c).v));
      rows.push_back(std::move(r));
    }
  const std::uint64_t total = sat_pow(p, static_cast<unsigned>(rows.size()));
  Tracker t(static_cast<unsigned>(n) + 1, opts.max_witnesses);
  std::vector<std::uint8_t> cw(n, 0);
  for (std::uint64_t step = 1; step < total; ++step) {
    std::uint64_t x = step;
    std::size_t d = 0;
    while (x % p == 0) {
      x /= p;
      ++d;
    }
    bf.add_into(cw.data(), rows[d].data(), n);
    ++t.examined;
    const unsigned w = ByteField::weight(cw.data(), n);
    if (w <= t.best) t.offer(w, cw.data(), n);
    if (opts.stop_at > 0 && t.best <= opts.stop_at) break;
  }
  DistanceCertificate cert;
  cert.method = DistanceMethod::exhaustive;
  finish(cert, t, n);
  const bool complete = !(opts.stop_at > 0 && t.examined + 1 < total);
  cert.lower = complete ? cert.upper : std::max<std::size_t>(1, opts.known_lower_bound);
  return cert;
}

struct InfoSetMatrix {
  RowSet rows;
  std::size_t deficiency = 0;
  int done = 0;  // highest information weight fully enumerated
};

DistanceCertificate information_set_distance(const GeneratorMatrix& m, const DistanceOptions& opts) {
  const auto& F = *m.field();
  ByteField bf(F);
  const std::size_t n = m.n();
  const std::size_t k = m.k();
  const std::size_t stride = (n + 31) / 32 * 32;
  const unsigned threads = worker_threads(opts.threads);

  std::vector<InfoSetMatrix> mats;
  std::vector<std::size_t> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<bool> used(n, false);
  while (!remaining.empty()) {
    std::vector<std::size_t> order = remaining;
    for (std::size_t c = 0; c < n; ++c)
      if (used[c]) order.push_back(c);
    auto bytes = to_bytes(m, stride);
    const auto pivots = byte_rref(bf, bytes, k, n, stride, order);
    std::size_t fresh = 0;
    for (auto c : pivots)
      if (!used[c]) {
        used[c] = true;
        ++fresh;
      }
    if (fresh == 0) break;
    mats.push_back({make_rowset(bf, bytes, k, n, stride), k - fresh, 0});
    std::erase_if(remaining, [&](std::size_t c) { return used[c]; });
  }

  Tracker tracker(static_cast<unsigned>(n) + 1, opts.max_witnesses);
  auto lower_bound = [&] {
    std::size_t lb = 1;
    std::size_t sum = 0;
    for (const auto& mat : mats)
      if (static_cast<std::size_t>(mat.done) + 1 > mat.deficiency) sum += mat.done + 1 - mat.deficiency;
    lb = std::max(lb, sum);
    return std::max(lb, opts.known_lower_bound);
  };

  DistanceCertificate cert;
  cert.method = DistanceMethod::information_sets;
  bool stopped = false;
  for (unsigned w = 1; w <= k && !stopped; ++w) {
    for (auto& mat : mats) {
      if (mat.deficiency > w) continue;
      while (static_cast<unsigned>(mat.done) < w) {
        const unsigned level = static_cast<unsigned>(mat.done) + 1;
        const std::uint64_t cost = unit_cost(k, level, F.size());
        if (opts.budget > 0 && tracker.examined + cost > opts.budget) {
          cert.budget_exhausted = true;
          stopped = true;
          break;
        }
        run_unit(bf, mat.rows, level, tracker, threads);
        mat.done = static_cast<int>(level);
      }
      if (stopped) break;
      if (lower_bound() >= tracker.best || (opts.stop_at > 0 && tracker.best <= opts.stop_at)) {
        stopped = true;
        break;
      }
    }
  }
  finish(cert, tracker, n);
  // Matrix 0 is systematic on a full information set, so finishing weight k
  // there has visited every codeword up to scalars.
  const bool complete = !mats.empty() && static_cast<std::size_t>(mats[0].done) == k;
  cert.lower = complete ? cert.upper : std::min<std::size_t>(lower_bound(), cert.upper);
  return cert;
}

}  // namespace

DistanceCertificate min_distance(const GeneratorMatrix& m, const DistanceOptions& opts) {
  if (m.k() == 0) throw RankError("min_distance: the zero code has no minimum distance");
  using S = DistanceOptions::Strategy;
  S s = opts.strategy;
  if (s == S::automatic) {
    const std::uint64_t size = sat_pow(m.field()->size(), static_cast<unsigned>(m.k()));
    s = size <= opts.exhaustive_cap ? S::exhaustive : S::information_sets;
  }
  return s == S::exhaustive ? exhaustive_distance(m, opts) : information_set_distance(m, opts);
}

DistanceCertificate upper_bound_search(const GeneratorMatrix& m, const UpperBoundOptions& opts) {
  if (m.k() == 0) throw RankError("upper_bound_search: the zero code has no minimum distance");
  const auto& F = *m.field();
  ByteField bf(F);
  const std::size_t n = m.n();
  const std::size_t k = m.k();
  const std::size_t stride = (n + 31) / 32 * 32;
  unsigned p = opts.info_weight;
  if (p == 0) {
    p = 1;
    while (p < k && unit_cost(k, p + 1, F.size()) <= opts.per_iteration_budget) ++p;
  }
  p = static_cast<unsigned>(std::min<std::size_t>(p, k));

  const auto original = to_bytes(m, stride);
  Tracker tracker(static_cast<unsigned>(n) + 1, 0);
  std::vector<std::size_t> order(n);
  for (std::uint64_t it = 0; it < opts.iterations; ++it) {
    std::iota(order.begin(), order.end(), 0);
    if (it > 0) {
      std::mt19937_64 rng(splitmix64(opts.seed ^ splitmix64(it)));
      for (std::size_t i = n; i-- > 1;) std::swap(order[i], order[rng() % (i + 1)]);
    }
    auto bytes = original;
    byte_rref(bf, bytes, k, n, stride, order);
    const RowSet rs = make_rowset(bf, bytes, k, n, stride);
    for (unsigned w = 1; w <= p; ++w) {
      Enumerator(bf, rs, w, tracker).run(0, 1);
      if (tracker.best <= opts.target) break;
    }
    if (tracker.best <= opts.target) break;
  }
  DistanceCertificate cert;
  cert.method = DistanceMethod::random_information_sets;
  finish(cert, tracker, n);
  cert.lower = std::min(opts.known_lower_bound, cert.upper);
  return cert;
}

bool witness_valid(const GeneratorMatrix& m, const DistanceCertificate& cert) {
  if (cert.witness.size() != m.n()) return false;
  if (weight(cert.witness) != cert.upper || cert.upper == 0) return false;
  return m.contains(cert.witness);
}

}  // namespace cyclequiv
