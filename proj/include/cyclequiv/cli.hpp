#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cyclequiv/search.hpp"

namespace cyclequiv {

// One expected code: "label q n k d level construction polynomials...".
// level "exact" demands a complete distance certificate equal to d; "upper"
// demands a stored codeword of weight at most d.
struct ManifestEntry {
  std::string label;
  std::uint32_t q = 2;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  enum class Level { exact, upper } level = Level::exact;
  std::string chain;
  std::vector<std::string> polys;
  std::size_t line = 0;
};

// Throws std::runtime_error naming the line on malformed input or duplicate labels.
std::vector<ManifestEntry> read_manifest(std::istream& in);
std::vector<ManifestEntry> read_manifest_file(const std::string& path);

struct VerifyOptions {
  // Codeword budget of the exact engine per entry (0 = unlimited).
  std::uint64_t budget = 0;
  // Randomized iterations for "upper" entries.
  std::uint64_t iterations = 2000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

struct VerifyResult {
  ManifestEntry entry;
  bool pass = false;
  std::size_t n = 0;
  std::size_t k = 0;
  DistanceCertificate cert;
  bool witness_checked = false;
  std::string detail;
  double seconds = 0;
};

VerifyResult verify_entry(const ManifestEntry& e, const VerifyOptions& opts = {});

// The command-line tool: cosets, equiv, partition, mindist, search, verify.
// Reports go to out, diagnostics and progress to err. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclequiv
