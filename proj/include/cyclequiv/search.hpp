#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "cyclequiv/codes.hpp"
#include "cyclequiv/distance.hpp"
#include "cyclequiv/equivalence.hpp"

namespace cyclequiv {

// Best known minimum distances keyed by (q, n, k). File format: one
// whitespace-separated "q n k d" entry per line, '#' starts a comment.
class BKLCTable {
 public:
  static BKLCTable load(std::istream& in);
  static BKLCTable load_file(const std::string& path);

  void set(std::uint32_t q, std::size_t n, std::size_t k, std::size_t d);
  std::optional<std::size_t> lookup(std::uint32_t q, std::size_t n, std::size_t k) const;
  std::size_t size() const { return table_.size(); }

 private:
  std::map<std::tuple<std::uint32_t, std::size_t, std::size_t>, std::size_t> table_;
};

// How a code is built: a base family plus a chain of single-step operations.
struct Construction {
  enum class Base {
    cyclic,        // polys = {g}, length n
    check,         // polys = {h}; the cyclic code with check polynomial h, length n
    quasi_cyclic,  // polys = {g, f_2, ..., f_ell}, blocks of length m
  };
  enum class Op { shorten, puncture, extend };
  struct Step {
    Op op = Op::extend;
    std::size_t pos = 0;  // ignored for extend

    friend bool operator==(const Step&, const Step&) = default;
  };

  FieldPtr field;
  Base base = Base::cyclic;
  std::size_t n = 0;  // cyclic length, or the block length m for quasi_cyclic
  std::size_t ell = 1;
  std::vector<Poly> polys;
  std::vector<Step> steps;

  GeneratorMatrix build() const;
  // e.g. "qc:m=20,ell=3>shorten@0>extend"
  std::string chain() const;
  // Bracketed polynomial strings, space-separated.
  std::string polys_text() const;
  Construction then(Step s) const;
};

// Parses a chain string plus its polynomial strings back into a construction.
Construction parse_construction(const FieldPtr& field, std::string_view chain, const std::vector<std::string>& polys);

enum class BKLCStatus { unknown, below, matches, beats };
std::string to_string(BKLCStatus s);

struct CodeRecord {
  std::uint32_t q = 2;
  std::size_t n = 0;
  std::size_t k = 0;
  DistanceCertificate cert;
  Construction construction;
  // Randomness seed of the trial that produced the code; absent for forced or deterministic codes.
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> bklc;
  BKLCStatus status = BKLCStatus::unknown;
  std::shared_ptr<const GeneratorMatrix> matrix;

  std::size_t d() const { return cert.upper; }
};

// "q n k d cert seed construction-chain polynomials... bklc=<d> status=<s>";
// cert is "exact" or "lb=<lower>", seed is "-" when absent.
std::string format_record(const CodeRecord& r);
void write_records(std::ostream& out, const std::vector<CodeRecord>& records, std::string_view kind);

struct SearchConfig {
  FieldPtr field;
  std::size_t n = 0;  // cyclic length (sweep) or block length m (ASR)
  std::size_t ell = 3;
  std::size_t kmin = 1;
  std::size_t kmax = SIZE_MAX;
  std::uint64_t trials = 0;
  std::uint64_t seed = 1;
  Mode mode = Mode::strict;
  DistanceOptions distance;
  std::uint64_t partition_budget = std::uint64_t{1} << 24;
  const BKLCTable* bklc = nullptr;
  // Constructions run through the same pipeline before any random trial.
  std::vector<Construction> forced;
  std::function<void(const std::string&)> progress;
};

// Certifies one code and compares it with the table.
CodeRecord certify(const Construction& c, const DistanceOptions& opts, const BKLCTable* bklc,
                   std::optional<std::uint64_t> seed = std::nullopt);

// One record per affine class representative of length cfg.n in the
// dimension range (the zero code is skipped), in partition order.
std::vector<CodeRecord> cyclic_sweep(const SearchConfig& cfg);

// 1-generator QC search: for each representative g | x^m - 1 in the dimension
// range, cfg.trials random tuples (f_2..f_ell) coprime to h; records sorted by
// (k, -d), ties in generation order.
std::vector<CodeRecord> asr_search(const SearchConfig& cfg);

// The uniform random f with deg f < m and gcd(f, h) = 1 drawn for the given
// (representative, trial, block) stream.
Poly draw_multiplier(const FieldPtr& field, std::size_t m, const Poly& h, std::uint64_t seed, std::uint64_t rep,
                     std::uint64_t trial, std::uint64_t block);

struct DeriveOptions {
  bool shorten = true;
  bool puncture = true;
  bool extend = true;
  // Restrict positions to one per orbit of the code's known shift symmetry
  // (cyclic: one position; QC: one per block). Only applies to codes with no derivation steps yet.
  bool orbit_representatives = true;
  // Explicit positions override the defaults when nonempty.
  std::vector<std::size_t> positions;
  DistanceOptions distance;
};

// Single-step shortenings, puncturings and the extension of a record, each
// certified afresh. The parent's bounds enter only as proven floors
// (shorten/extend keep d, puncture loses at most one).
std::vector<CodeRecord> derive_neighbors(const CodeRecord& rec, const BKLCTable* bklc, const DeriveOptions& opts = {});

}  // namespace cyclequiv
