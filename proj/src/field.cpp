#include "cyclequiv/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace cyclequiv {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit integers.
bool probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s && composite; ++r) {
      x = mul_mod(x, x, n);
      composite = x != n - 1;
    }
    if (composite) return false;
  }
  return true;
}

// A nontrivial factor of the odd composite n (Pollard rho, Brent variant).
std::uint64_t rho_factor(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    auto f = [&](std::uint64_t v) {
      const std::uint64_t r = mul_mod(v, v, n), s = r + c;  // c < n, so one subtraction suffices
      return (s < r || s >= n) ? s - n : s;
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void collect_factors(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (probable_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = rho_factor(n);
  collect_factors(d, out);
  collect_factors(n / d, out);
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d < 1000 && d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  collect_factors(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 1;
  if (std::gcd(a % n, n) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
  std::uint64_t x = a % n;
  std::uint64_t k = 1;
  while (x != 1) {
    x = (x * a) % n;
    ++k;
  }
  return k;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t r0 = n, r1 = ((a % n) + n) % n;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t t = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - t * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - t * s1};
  }
  if (r0 != 1) throw std::invalid_argument("inverse_mod: " + std::to_string(a) + " is not a unit mod " +
                                           std::to_string(n));
  return ((s0 % n) + n) % n;
}

namespace prime_poly {

std::vector<unsigned> trim(std::vector<unsigned> f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

std::vector<unsigned> rem(std::vector<unsigned> a, const std::vector<unsigned>& b, unsigned p) {
  a = trim(std::move(a));
  const std::size_t db = b.size() - 1;
  const unsigned lead_inv = static_cast<unsigned>(inverse_mod(b.back(), p));
  while (a.size() >= b.size()) {
    const unsigned c = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
    a = trim(std::move(a));
  }
  return a;
}

std::vector<unsigned> mulmod(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                             const std::vector<unsigned>& mod, unsigned p) {
  if (a.empty() || b.empty()) return {};
  std::vector<unsigned> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return rem(std::move(prod), mod, p);
}

std::vector<unsigned> gcd(std::vector<unsigned> a, std::vector<unsigned> b, unsigned p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    auto r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const std::vector<unsigned>& f, unsigned p) {
  const std::size_t m = f.size() - 1;
  if (m == 0) return false;
  if (m == 1) return true;
  // x^(p^d) mod f, d = 1..m/2; f is irreducible iff gcd(f, x^(p^d) - x) = 1 for all such d.
  std::vector<unsigned> xp = {0, 1};
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::vector<unsigned> acc = {1};
    std::vector<unsigned> base = xp;
    for (unsigned e = p; e > 0; e >>= 1) {
      if (e & 1) acc = mulmod(acc, base, f, p);
      base = mulmod(base, base, f, p);
    }
    xp = acc;
    std::vector<unsigned> diff = xp;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    auto g = gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace prime_poly

namespace {

// Coordinates in "lexicographic" order: the constant coefficient is the most
// significant key, so candidate idx decodes with c_0 as its top digit.
std::vector<unsigned> lex_candidate(std::uint64_t idx, unsigned p, unsigned m) {
  std::vector<unsigned> c(m, 0);
  for (unsigned j = m; j-- > 0;) {
    c[j] = static_cast<unsigned>(idx % p);
    idx /= p;
  }
  return c;
}

std::uint32_t encode(std::span<const unsigned> c, unsigned p) {
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

}  // namespace

namespace prime_poly {

std::vector<unsigned> powmod(const std::vector<unsigned>& a, std::uint64_t e, const std::vector<unsigned>& mod,
                             unsigned p) {
  std::vector<unsigned> acc = {1};
  auto base = rem(a, mod, p);
  while (e > 0) {
    if (e & 1) acc = mulmod(acc, base, mod, p);
    e >>= 1;
    if (e) base = mulmod(base, base, mod, p);
  }
  return trim(std::move(acc));
}

std::vector<unsigned> least_irreducible(unsigned p, unsigned m) {
  // In this order the constant coefficient is the leading key, and every
  // candidate with c_0 = 0 is divisible by x, so for m >= 2 start at c_0 = 1.
  const std::uint64_t start = m >= 2 ? ipow(p, m - 1) : 0;
  for (std::uint64_t idx = start;; ++idx) {
    auto c = lex_candidate(idx, p, m);
    c.push_back(1);
    if (is_irreducible(c, p)) return c;
  }
}

std::vector<unsigned> first_primitive(unsigned p, const std::vector<unsigned>& modulus) {
  const unsigned m = static_cast<unsigned>(modulus.size() - 1);
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < m; ++i) q *= p;
  if (q > static_cast<unsigned __int128>(UINT64_MAX)) throw std::out_of_range("first_primitive: field too large");
  const std::uint64_t group = static_cast<std::uint64_t>(q) - 1;
  if (group == 1) return {1};
  const auto factors = prime_factors(group);
  for (std::uint64_t idx = 1;; ++idx) {
    const auto c = lex_candidate(idx, p, m);
    if (trim(c).empty()) continue;
    bool primitive = true;
    for (auto r : factors) {
      if (powmod(c, group / r, modulus, p) == std::vector<unsigned>{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) return c;
  }
}

}  // namespace prime_poly

Field::Field(unsigned p, unsigned m) : p_(p), m_(m), q_(static_cast<std::uint32_t>(ipow(p, m))) {
  pow_p_.resize(m_);
  for (unsigned i = 0; i < m_; ++i) pow_p_[i] = static_cast<std::uint32_t>(ipow(p_, i));

  if (m_ == 1) {
    modulus_ = {0, 1};
  } else {
    modulus_ = prime_poly::least_irreducible(p_, m_);
  }

  // Multiplication by a fixed element g as an m x m matrix over GF(p):
  // column i holds g * x^i reduced modulo the field modulus.
  auto mul_matrix = [&](const std::vector<unsigned>& g) {
    std::vector<std::vector<unsigned>> cols(m_);
    for (unsigned i = 0; i < m_; ++i) {
      std::vector<unsigned> xi(i + 1, 0);
      xi[i] = 1;
      auto prod = m_ == 1 ? std::vector<unsigned>{(g[0]) % p_}
                          : prime_poly::mulmod(g, xi, modulus_, p_);
      prod.resize(m_, 0);
      cols[i] = std::move(prod);
    }
    return cols;
  };
  auto apply = [&](const std::vector<std::vector<unsigned>>& cols, const std::vector<unsigned>& a) {
    std::vector<unsigned> r(m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; j < m_; ++j) r[j] = (r[j] + a[i] * cols[i][j]) % p_;
    }
    return r;
  };
  auto decode = [&](std::uint32_t v) {
    std::vector<unsigned> c(m_);
    for (unsigned i = 0; i < m_; ++i) {
      c[i] = v % p_;
      v /= p_;
    }
    return c;
  };

  const std::uint64_t group = q_ - 1;
  const auto factors = prime_factors(group);
  auto slow_pow = [&](const std::vector<unsigned>& g, std::uint64_t e) {
    std::vector<unsigned> acc(m_, 0);
    acc[0] = 1;
    auto base = g;
    while (e > 0) {
      if (e & 1) acc = apply(mul_matrix(base), acc);
      base = apply(mul_matrix(base), base);
      e >>= 1;
    }
    return acc;
  };
  auto is_one = [&](const std::vector<unsigned>& a) {
    if (a[0] != 1) return false;
    for (unsigned i = 1; i < m_; ++i)
      if (a[i] != 0) return false;
    return true;
  };

  std::vector<unsigned> gen;
  for (std::uint64_t idx = 1; idx < q_; ++idx) {
    auto c = lex_candidate(idx, p_, m_);
    bool all_zero = true;
    for (auto x : c) all_zero &= (x == 0);
    if (all_zero) continue;
    bool primitive = true;
    for (auto r : factors) {
      if (is_one(slow_pow(c, group / r))) {
        primitive = false;
        break;
      }
    }
    if (group == 0 || primitive) {
      gen = std::move(c);
      break;
    }
  }
  if (q_ == 2) gen = {1};
  generator_ = Elem{encode(gen, p_)};

  exp_.assign(group == 0 ? 1 : group, 0);
  log_.assign(q_, 0);
  const auto gcols = mul_matrix(gen);
  std::vector<unsigned> cur(m_, 0);
  cur[0] = 1;
  for (std::uint64_t k = 0; k < group; ++k) {
    const auto v = encode(cur, p_);
    exp_[k] = v;
    log_[v] = static_cast<std::uint32_t>(k);
    cur = apply(gcols, cur);
  }

  if (m_ > 1 && p_ != 2 && q_ <= 256) {
    add_table_.resize(std::size_t{q_} * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      const auto ca = decode(a);
      for (std::uint32_t b = 0; b < q_; ++b) {
        const auto cb = decode(b);
        std::vector<unsigned> s(m_);
        for (unsigned i = 0; i < m_; ++i) s[i] = (ca[i] + cb[i]) % p_;
        add_table_[std::size_t{a} * q_ + b] = static_cast<std::uint8_t>(encode(s, p_));
      }
    }
  }
}

FieldPtr Field::make(unsigned p, unsigned m, std::uint64_t bound) {
  if (!cyclequiv::is_prime(p)) throw std::invalid_argument("field: characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("field: extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > bound || q > kDefaultFieldBound * 4)
      throw std::out_of_range("field: " + std::to_string(p) + "^" + std::to_string(m) +
                              " exceeds the configured bound " + std::to_string(bound));
  }
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, FieldPtr> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p, m}];
  if (!slot) slot = std::make_shared<const Field>(p, m);
  return slot;
}

FieldPtr Field::of_size(std::uint64_t q, std::uint64_t bound) {
  if (q < 2) throw std::invalid_argument("field: size must be >= 2");
  const auto f = prime_factors(q);
  if (f.size() != 1) throw std::invalid_argument("field: size " + std::to_string(q) + " is not a prime power");
  unsigned m = 0;
  for (std::uint64_t x = q; x > 1; x /= f[0]) ++m;
  return make(static_cast<unsigned>(f[0]), m, bound);
}

Elem Field::add(Elem a, Elem b) const {
  if (m_ == 1) {
    std::uint32_t s = a.v + b.v;
    return Elem{s >= p_ ? s - p_ : s};
  }
  if (p_ == 2) return Elem{a.v ^ b.v};
  if (!add_table_.empty()) return Elem{add_table_[std::size_t{a.v} * q_ + b.v]};
  std::uint32_t r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint32_t da = (a.v / pow_p_[i]) % p_;
    const std::uint32_t db = (b.v / pow_p_[i]) % p_;
    r += ((da + db) % p_) * pow_p_[i];
  }
  return Elem{r};
}

Elem Field::neg(Elem a) const {
  if (a.v == 0 || p_ == 2) return a;
  if (m_ == 1) return Elem{p_ - a.v};
  std::uint32_t r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint32_t d = (a.v / pow_p_[i]) % p_;
    r += ((p_ - d) % p_) * pow_p_[i];
  }
  return Elem{r};
}

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw std::domain_error("field: inverse of zero");
  const std::uint32_t l = log_[a.v];
  return Elem{exp_[l == 0 ? 0 : (q_ - 1) - l]};
}

Elem Field::exp(std::int64_t k) const {
  const std::int64_t g = q_ - 1;
  return Elem{exp_[static_cast<std::size_t>(((k % g) + g) % g)]};
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a.v == 0) {
    if (e == 0) return one();
    if (e < 0) throw std::domain_error("field: negative power of zero");
    return zero();
  }
  const std::int64_t g = q_ - 1;
  const std::int64_t l = log_[a.v];
  const std::int64_t r = ((e % g) + g) % g;
  return Elem{exp_[static_cast<std::size_t>((static_cast<__int128>(l) * r) % g)]};
}

std::uint32_t Field::log(Elem a) const {
  if (a.v == 0) throw std::domain_error("field: log of zero");
  return log_[a.v];
}

std::uint64_t Field::order(Elem a) const {
  const std::uint64_t g = q_ - 1;
  return g / std::gcd<std::uint64_t>(g, log(a));
}

Elem Field::from_int(std::int64_t c) const {
  const std::int64_t p = p_;
  return Elem{static_cast<std::uint32_t>(((c % p) + p) % p)};
}

std::vector<unsigned> Field::coordinates(Elem a) const {
  std::vector<unsigned> c(m_);
  std::uint32_t v = a.v;
  for (unsigned i = 0; i < m_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

Elem Field::from_coordinates(std::span<const unsigned> coords) const {
  if (coords.size() != m_) throw std::invalid_argument("field: wrong number of coordinates");
  for (auto c : coords)
    if (c >= p_) throw std::invalid_argument("field: coordinate out of range");
  return Elem{encode(coords, p_)};
}

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << q_ << ")";
  return os.str();
}

}  // namespace cyclequiv
