#include "cyclequiv/partition.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace cyclequiv {

std::uint64_t multiset_count(const CosetTable& table) {
  const std::uint64_t base = std::uint64_t{table.repeat()} + 1;
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < table.count(); ++j) {
    if (total > UINT64_MAX / base) throw std::length_error("partition: multiset count overflows 64 bits");
    total *= base;
  }
  return total - 1;
}

CosetMultiset index_to_multiset(std::uint64_t idx, const CosetTablePtr& table) {
  const std::uint64_t total = multiset_count(*table);
  if (idx < 1 || idx > total)
    throw std::out_of_range("index_to_multiset: index " + std::to_string(idx) + " outside [1, " +
                            std::to_string(total) + "]");
  const std::uint64_t base = std::uint64_t{table->repeat()} + 1;
  std::vector<unsigned> mult(table->count(), 0);
  for (std::size_t j = 0; j < mult.size(); ++j) {
    mult[j] = static_cast<unsigned>(idx % base);
    idx /= base;
  }
  return CosetMultiset(table, std::move(mult));
}

std::uint64_t multiset_to_index(const CosetMultiset& ms) {
  const std::uint64_t base = std::uint64_t{ms.table()->repeat()} + 1;
  std::uint64_t idx = 0;
  const auto& m = ms.multiplicities();
  for (std::size_t j = m.size(); j-- > 0;) idx = idx * base + m[j];
  return idx;
}

namespace {

// Invariants of a multiset under every map z -> e z + b with e a unit: its
// size, the sorted multiplicity profile, and the sorted autocorrelation
// values sum_z m(z) m(z + d) over all shifts d (d -> e d permutes them).
std::vector<std::uint64_t> affine_invariants(const PreparedMultiset& p) {
  std::vector<std::uint64_t> key{p.size};
  std::vector<std::uint64_t> profile;
  for (auto z : p.support) profile.push_back(p.mult[z]);
  std::sort(profile.begin(), profile.end());
  key.push_back(profile.size());
  key.insert(key.end(), profile.begin(), profile.end());
  std::vector<std::uint64_t> corr(p.n_q, 0);
  for (std::size_t d = 0; d < p.n_q; ++d)
    for (auto z : p.support) corr[d] += std::uint64_t{p.mult[z]} * p.mult[(z + d) % p.n_q];
  std::sort(corr.begin(), corr.end());
  key.insert(key.end(), corr.begin(), corr.end());
  return key;
}

}  // namespace

PartitionRecord partition_cyclic(const FieldPtr& field, std::size_t n, const PartitionOptions& opts) {
  if (n < 1) throw std::invalid_argument("partition: length must be >= 1");
  PartitionRecord rec;
  rec.table = CosetTable::make(field, n);
  rec.mode = opts.mode;
  const std::uint64_t total = multiset_count(*rec.table);
  if (total > opts.budget)
    throw std::length_error("partition: " + std::to_string(total) + " multisets exceed the budget of " +
                            std::to_string(opts.budget));
  const AffineSearchPlan plan(*rec.table);
  std::vector<PreparedMultiset> prepared;
  // Representative indices per invariant key, in first-seen order.
  std::map<std::vector<std::uint64_t>, std::vector<std::uint32_t>> buckets;
  std::vector<std::uint32_t> all;
  if (opts.record_membership) rec.class_of.reserve(total);

  for (std::uint64_t idx = 1; idx <= total; ++idx) {
    CosetMultiset ms = index_to_multiset(idx, rec.table);
    PreparedMultiset pm(ms);
    std::vector<std::uint32_t>* candidates = &all;
    std::vector<std::uint64_t> key;
    if (opts.bucket_by_invariants) {
      key = affine_invariants(pm);
      candidates = &buckets[key];
    }
    std::uint32_t cls = UINT32_MAX;
    for (auto r : *candidates) {
      ++rec.comparisons;
      if (affine_equivalent(prepared[r], pm, plan, opts.mode)) {
        cls = r;
        break;
      }
    }
    if (cls == UINT32_MAX) {
      cls = static_cast<std::uint32_t>(rec.representatives.size());
      rec.representatives.push_back(std::move(ms));
      rec.class_sizes.push_back(0);
      prepared.push_back(std::move(pm));
      candidates->push_back(cls);
    }
    ++rec.class_sizes[cls];
    if (opts.record_membership) rec.class_of.push_back(cls);
    ++rec.total_enumerated;
    if (opts.progress && idx % opts.progress_every == 0) opts.progress(idx, total);
  }
  return rec;
}

namespace {
constexpr const char* kPartitionHeader = "cyclequiv-partition 1";
}

void write_partition(std::ostream& out, const PartitionRecord& rec) {
  const auto& t = *rec.table;
  out << kPartitionHeader << '\n';
  out << "q " << t.field()->size() << '\n';
  out << "n " << t.n() << '\n';
  out << "mode " << to_string(rec.mode) << '\n';
  out << "cosets " << t.count() << '\n';
  out << "total " << rec.total_enumerated << '\n';
  out << "classes " << rec.representatives.size() << '\n';
  if (t.field()->size() != 2)
    out << "# classes are affine classes; for q > 2 two classes may still hold monomially equivalent codes\n";
  for (std::size_t r = 0; r < rec.representatives.size(); ++r)
    out << format_multiset(rec.representatives[r]) << '\t' << rec.class_sizes[r] << '\t'
        << format_poly(coset_to_poly(rec.representatives[r])) << '\n';
}

PartitionRecord read_partition(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) -> std::runtime_error {
    return std::runtime_error("partition record line " + std::to_string(lineno) + ": " + why);
  };
  auto next = [&]() {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line[0] != '#') return true;
    }
    return false;
  };
  if (!next() || line != kPartitionHeader) throw fail("expected header '" + std::string(kPartitionHeader) + "'");
  std::map<std::string, std::string> fields;
  for (const char* name : {"q", "n", "mode", "cosets", "total", "classes"}) {
    if (!next()) throw fail(std::string("missing field '") + name + "'");
    std::istringstream ls(line);
    std::string key, value;
    ls >> key >> value;
    if (key != name || value.empty()) throw fail(std::string("expected field '") + name + "'");
    fields[key] = value;
  }
  PartitionRecord rec;
  rec.table = CosetTable::make(Field::of_size(std::stoull(fields["q"])), std::stoull(fields["n"]));
  rec.mode = parse_mode(fields["mode"]);
  rec.total_enumerated = std::stoull(fields["total"]);
  if (std::stoull(fields["cosets"]) != rec.table->count()) throw fail("coset count does not match the table");
  const std::size_t classes = std::stoull(fields["classes"]);
  for (std::size_t r = 0; r < classes; ++r) {
    if (!next()) throw fail("expected " + std::to_string(classes) + " representatives");
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) throw fail("expected three tab-separated columns");
    CosetMultiset ms = parse_multiset(rec.table, line.substr(0, t1));
    const Poly g = parse_poly(rec.table->field(), line.substr(t2 + 1));
    if (!(coset_to_poly(ms) == g)) throw fail("generator does not match the multiset");
    rec.representatives.push_back(std::move(ms));
    rec.class_sizes.push_back(std::stoull(line.substr(t1 + 1, t2 - t1 - 1)));
  }
  return rec;
}

}  // namespace cyclequiv
