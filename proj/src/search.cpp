#include "cyclequiv/search.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "cyclequiv/partition.hpp"

namespace cyclequiv {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// One independent stream per (seed, representative, trial, block), so the
// drawn values never depend on evaluation order.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t rep, std::uint64_t trial, std::uint64_t block) {
  std::uint64_t s = splitmix64(seed);
  s = splitmix64(s ^ rep);
  s = splitmix64(s ^ trial);
  return splitmix64(s ^ block);
}

std::size_t parse_size(std::string_view text, std::string_view what) {
  if (text.empty()) throw ParseError("construction: missing " + std::string(what), 0);
  std::size_t v = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("construction: bad " + std::string(what) + " '" + std::string(text) + "'", i);
    v = v * 10 + static_cast<std::size_t>(text[i] - '0');
  }
  return v;
}

}  // namespace

BKLCTable BKLCTable::load(std::istream& in) {
  BKLCTable t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::uint64_t q = 0, n = 0, k = 0, d = 0;
    if (!(ls >> q)) continue;
    std::string extra;
    if (!(ls >> n >> k >> d) || (ls >> extra) || q < 2 || d == 0 || k > n)
      throw std::runtime_error("bklc table line " + std::to_string(lineno) + ": expected 'q n k d'");
    t.set(static_cast<std::uint32_t>(q), n, k, d);
  }
  return t;
}

BKLCTable BKLCTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open bklc table '" + path + "'");
  return load(in);
}

void BKLCTable::set(std::uint32_t q, std::size_t n, std::size_t k, std::size_t d) { table_[{q, n, k}] = d; }

std::optional<std::size_t> BKLCTable::lookup(std::uint32_t q, std::size_t n, std::size_t k) const {
  auto it = table_.find({q, n, k});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

GeneratorMatrix Construction::build() const {
  if (polys.empty()) throw std::invalid_argument("construction: no polynomials");
  std::optional<GeneratorMatrix> m;
  switch (base) {
    case Base::cyclic:
      m.emplace(circulant_matrix(CyclicCodeSpec::make(polys[0], n).g, n));
      break;
    case Base::check: {
      const auto dm = divmod(Poly::x_n_minus_one(field, n), polys[0]);
      if (!dm.remainder.is_zero())
        throw std::invalid_argument("construction: check polynomial " + format_poly(polys[0]) +
                                    " does not divide x^" + std::to_string(n) + " - 1");
      m.emplace(circulant_matrix(dm.quotient.monic(), n));
      break;
    }
    case Base::quasi_cyclic: {
      if (polys.size() != ell) throw std::invalid_argument("construction: qc needs ell polynomials");
      m.emplace(qc_matrix(QCCodeSpec::make(polys[0], n, {polys.begin() + 1, polys.end()})));
      break;
    }
  }
  for (const auto& s : steps) {
    switch (s.op) {
      case Op::shorten: m.emplace(shorten(*m, s.pos)); break;
      case Op::puncture: m.emplace(puncture(*m, s.pos)); break;
      case Op::extend: m.emplace(extend(*m)); break;
    }
  }
  return std::move(*m);
}

std::string Construction::chain() const {
  std::string out;
  switch (base) {
    case Base::cyclic: out = "cyclic:n=" + std::to_string(n); break;
    case Base::check: out = "check:n=" + std::to_string(n); break;
    case Base::quasi_cyclic: out = "qc:m=" + std::to_string(n) + ",ell=" + std::to_string(ell); break;
  }
  for (const auto& s : steps) {
    switch (s.op) {
      case Op::shorten: out += ">shorten@" + std::to_string(s.pos); break;
      case Op::puncture: out += ">puncture@" + std::to_string(s.pos); break;
      case Op::extend: out += ">extend"; break;
    }
  }
  return out;
}

std::string Construction::polys_text() const {
  std::string out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) out += ' ';
    out += format_poly(polys[i]);
  }
  return out;
}

Construction Construction::then(Step s) const {
  Construction c = *this;
  c.steps.push_back(s);
  return c;
}

Construction parse_construction(const FieldPtr& field, std::string_view chain,
                                const std::vector<std::string>& polys) {
  Construction c;
  c.field = field;
  std::vector<std::string_view> parts;
  for (std::size_t start = 0;;) {
    const auto gt = chain.find('>', start);
    parts.push_back(chain.substr(start, gt == std::string_view::npos ? chain.size() - start : gt - start));
    if (gt == std::string_view::npos) break;
    start = gt + 1;
  }
  const std::string_view head = parts[0];
  if (head.starts_with("cyclic:n=")) {
    c.base = Construction::Base::cyclic;
    c.n = parse_size(head.substr(9), "length");
  } else if (head.starts_with("check:n=")) {
    c.base = Construction::Base::check;
    c.n = parse_size(head.substr(8), "length");
  } else if (head.starts_with("qc:m=")) {
    c.base = Construction::Base::quasi_cyclic;
    const auto comma = head.find(",ell=");
    if (comma == std::string_view::npos) throw ParseError("construction: expected ',ell=' in '" + std::string(head) + "'", 0);
    c.n = parse_size(head.substr(5, comma - 5), "block length");
    c.ell = parse_size(head.substr(comma + 5), "index");
  } else {
    throw ParseError("construction: unknown base '" + std::string(head) + "'", 0);
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::string_view p = parts[i];
    Construction::Step s;
    if (p == "extend") {
      s.op = Construction::Op::extend;
    } else if (p.starts_with("shorten@")) {
      s.op = Construction::Op::shorten;
      s.pos = parse_size(p.substr(8), "position");
    } else if (p.starts_with("puncture@")) {
      s.op = Construction::Op::puncture;
      s.pos = parse_size(p.substr(9), "position");
    } else {
      throw ParseError("construction: unknown step '" + std::string(p) + "'", 0);
    }
    c.steps.push_back(s);
  }
  const std::size_t expected = c.base == Construction::Base::quasi_cyclic ? c.ell : 1;
  if (polys.size() != expected)
    throw std::invalid_argument("construction '" + std::string(chain) + "' needs " + std::to_string(expected) +
                                " polynomial(s), got " + std::to_string(polys.size()));
  for (const auto& p : polys) c.polys.push_back(parse_poly(field, p));
  return c;
}

std::string to_string(BKLCStatus s) {
  switch (s) {
    case BKLCStatus::unknown: return "unknown";
    case BKLCStatus::below: return "below";
    case BKLCStatus::matches: return "matches";
    case BKLCStatus::beats: return "new";
  }
  return "?";
}

namespace {

void compare_with_table(CodeRecord& r, const BKLCTable* bklc) {
  if (!bklc) return;
  r.bklc = bklc->lookup(r.q, r.n, r.k);
  if (!r.bklc) return;
  const std::size_t b = *r.bklc;
  if (r.cert.lower > b) {
    r.status = BKLCStatus::beats;
  } else if (r.cert.upper < b) {
    r.status = BKLCStatus::below;
  } else if (r.cert.exact() && r.cert.upper == b) {
    r.status = BKLCStatus::matches;
  } else {
    r.status = BKLCStatus::unknown;
  }
}

CodeRecord certify_matrix(std::shared_ptr<const GeneratorMatrix> m, Construction c, const DistanceOptions& opts,
                          const BKLCTable* bklc, std::optional<std::uint64_t> seed) {
  CodeRecord r;
  r.q = m->field()->size();
  r.n = m->n();
  r.k = m->k();
  r.cert = min_distance(*m, opts);
  r.construction = std::move(c);
  r.seed = seed;
  r.matrix = std::move(m);
  compare_with_table(r, bklc);
  return r;
}

}  // namespace

CodeRecord certify(const Construction& c, const DistanceOptions& opts, const BKLCTable* bklc,
                   std::optional<std::uint64_t> seed) {
  return certify_matrix(std::make_shared<const GeneratorMatrix>(c.build()), c, opts, bklc, seed);
}

std::string format_record(const CodeRecord& r) {
  std::ostringstream os;
  os << r.q << ' ' << r.n << ' ' << r.k << ' ' << r.d() << ' ';
  if (r.cert.exact())
    os << "exact";
  else
    os << "lb=" << r.cert.lower;
  os << ' ';
  if (r.seed)
    os << *r.seed;
  else
    os << '-';
  os << ' ' << r.construction.chain() << ' ' << r.construction.polys_text();
  os << " bklc=";
  if (r.bklc)
    os << *r.bklc;
  else
    os << '-';
  os << " status=" << to_string(r.status);
  return os.str();
}

void write_records(std::ostream& out, const std::vector<CodeRecord>& records, std::string_view kind) {
  out << "cyclequiv-records 1\n";
  out << "kind " << kind << '\n';
  out << "count " << records.size() << '\n';
  out << "# q n k d cert seed construction polynomials bklc status\n";
  for (const auto& r : records) out << format_record(r) << '\n';
}

std::vector<CodeRecord> cyclic_sweep(const SearchConfig& cfg) {
  std::vector<CodeRecord> out;
  if (cfg.kmin > cfg.kmax) return out;
  PartitionOptions popts;
  popts.mode = cfg.mode;
  popts.budget = cfg.partition_budget;
  const auto part = partition_cyclic(cfg.field, cfg.n, popts);
  for (std::size_t r = 0; r < part.representatives.size(); ++r) {
    const auto& ms = part.representatives[r];
    const std::size_t k = cfg.n - ms.size();
    if (k == 0 || k < cfg.kmin || k > cfg.kmax) continue;
    Construction c;
    c.field = cfg.field;
    c.base = Construction::Base::cyclic;
    c.n = cfg.n;
    c.polys = {coset_to_poly(ms)};
    out.push_back(certify(c, cfg.distance, cfg.bklc));
    if (cfg.progress)
      cfg.progress("sweep class " + std::to_string(r + 1) + "/" + std::to_string(part.representatives.size()) + ": " +
                   format_record(out.back()));
  }
  return out;
}

Poly draw_multiplier(const FieldPtr& field, std::size_t m, const Poly& h, std::uint64_t seed, std::uint64_t rep,
                     std::uint64_t trial, std::uint64_t block) {
  std::mt19937_64 rng(stream_seed(seed, rep, trial, block));
  const std::uint32_t q = field->size();
  for (std::uint64_t attempt = 0; attempt < 1'000'000; ++attempt) {
    std::vector<Elem> coeffs(m);
    for (auto& c : coeffs) c = Elem{static_cast<std::uint32_t>(rng() % q)};
    Poly f(field, std::move(coeffs));
    if (!f.is_zero() && gcd(f, h).is_one()) return f;
  }
  throw std::runtime_error("draw_multiplier: no polynomial coprime to h found");
}

std::vector<CodeRecord> asr_search(const SearchConfig& cfg) {
  if (cfg.ell < 2) throw std::invalid_argument("asr_search: ell must be at least 2");
  const std::size_t m = cfg.n;
  std::vector<CodeRecord> out;
  for (std::size_t i = 0; i < cfg.forced.size(); ++i) {
    out.push_back(certify(cfg.forced[i], cfg.distance, cfg.bklc));
    if (cfg.progress) cfg.progress("forced trial " + std::to_string(i + 1) + ": " + format_record(out.back()));
  }
  if (cfg.trials > 0 && cfg.kmin <= cfg.kmax) {
    PartitionOptions popts;
    popts.mode = cfg.mode;
    popts.budget = cfg.partition_budget;
    const auto part = partition_cyclic(cfg.field, m, popts);
    const Poly xm1 = Poly::x_n_minus_one(cfg.field, m);
    for (std::size_t r = 0; r < part.representatives.size(); ++r) {
      const auto& ms = part.representatives[r];
      const std::size_t k = m - ms.size();
      if (k == 0 || k < cfg.kmin || k > cfg.kmax) continue;
      const Poly g = coset_to_poly(ms);
      const Poly h = divmod(xm1, g).quotient;
      for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        Construction c;
        c.field = cfg.field;
        c.base = Construction::Base::quasi_cyclic;
        c.n = m;
        c.ell = cfg.ell;
        c.polys = {g};
        for (std::size_t j = 0; j + 1 < cfg.ell; ++j)
          c.polys.push_back(draw_multiplier(cfg.field, m, h, cfg.seed, r, t, j));
        out.push_back(certify(c, cfg.distance, cfg.bklc, stream_seed(cfg.seed, r, t, 0)));
        if (cfg.progress)
          cfg.progress("class " + std::to_string(r + 1) + "/" + std::to_string(part.representatives.size()) +
                       " trial " + std::to_string(t + 1) + ": " + format_record(out.back()));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const CodeRecord& a, const CodeRecord& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.d() > b.d();
  });
  return out;
}

std::vector<CodeRecord> derive_neighbors(const CodeRecord& rec, const BKLCTable* bklc, const DeriveOptions& opts) {
  std::vector<CodeRecord> out;
  if (rec.k == 0 || !rec.matrix) return out;
  const auto& parent = *rec.matrix;
  std::vector<std::size_t> positions = opts.positions;
  if (positions.empty()) {
    const auto& c = rec.construction;
    if (opts.orbit_representatives && c.steps.empty() && c.base != Construction::Base::quasi_cyclic) {
      positions = {0};
    } else if (opts.orbit_representatives && c.steps.empty()) {
      for (std::size_t b = 0; b < c.ell; ++b) positions.push_back(b * c.n);
    } else {
      for (std::size_t p = 0; p < parent.n(); ++p) positions.push_back(p);
    }
  }
  auto run = [&](Construction::Step step, std::size_t floor) {
    std::shared_ptr<const GeneratorMatrix> m;
    try {
      switch (step.op) {
        case Construction::Op::shorten: m = std::make_shared<const GeneratorMatrix>(shorten(parent, step.pos)); break;
        case Construction::Op::puncture: m = std::make_shared<const GeneratorMatrix>(puncture(parent, step.pos)); break;
        case Construction::Op::extend: m = std::make_shared<const GeneratorMatrix>(extend(parent)); break;
      }
    } catch (const RankError&) {
      return;  // degenerate at this position
    }
    DistanceOptions d = opts.distance;
    d.known_lower_bound = std::max(d.known_lower_bound, floor);
    out.push_back(certify_matrix(std::move(m), rec.construction.then(step), d, bklc, rec.seed));
  };
  const std::size_t lb = rec.cert.lower;
  if (opts.shorten && rec.k >= 2)
    for (auto p : positions) run({Construction::Op::shorten, p}, lb);
  if (opts.puncture && parent.n() >= 2)
    for (auto p : positions) run({Construction::Op::puncture, p}, lb > 1 ? lb - 1 : 0);
  if (opts.extend) run({Construction::Op::extend, 0}, lb);
  return out;
}

}  // namespace cyclequiv
