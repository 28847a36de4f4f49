#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclequiv/codes.hpp"

namespace cyclequiv {

enum class DistanceMethod { exhaustive, information_sets, random_information_sets, inherited };

std::string to_string(DistanceMethod m);

// lower <= d <= upper, with upper witnessed by a codeword of exactly that weight.
struct DistanceCertificate {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::vector<Elem> witness;
  // Further codewords of weight `upper`, when collection was requested.
  std::vector<std::vector<Elem>> extra_witnesses;
  DistanceMethod method = DistanceMethod::exhaustive;
  std::uint64_t codewords_examined = 0;
  bool budget_exhausted = false;

  bool exact() const { return lower == upper; }
};

struct DistanceOptions {
  enum class Strategy { automatic, exhaustive, information_sets };
  Strategy strategy = Strategy::automatic;
  // Codeword budget for the information-set engine; 0 means unlimited.
  std::uint64_t budget = 0;
  // automatic picks the exhaustive walk when q^k is at most this.
  std::uint64_t exhaustive_cap = std::uint64_t{1} << 24;
  // A lower bound known by other means (e.g. inherited through shortening).
  std::size_t known_lower_bound = 0;
  // Stop as soon as a codeword of weight <= stop_at is found (0 disables).
  std::size_t stop_at = 0;
  // Collect up to this many codewords of the final minimum weight.
  std::size_t max_witnesses = 0;
  // Worker threads; 0 reads CYCLEQUIV_THREADS or uses the machine parallelism.
  unsigned threads = 0;
};

// Exact minimum distance when the budget allows, otherwise the best bounds found.
// Throws RankError for the zero code.
DistanceCertificate min_distance(const GeneratorMatrix& m, const DistanceOptions& opts = {});

struct UpperBoundOptions {
  // Stop when a codeword of weight <= target is found.
  std::size_t target = 0;
  std::uint64_t iterations = 1000;
  std::uint64_t seed = 1;
  // Information-set weight enumerated per iteration; 0 picks one from per_iteration_budget.
  unsigned info_weight = 0;
  std::uint64_t per_iteration_budget = 300000;
  std::size_t known_lower_bound = 1;
};

// Randomized low-weight codeword search over random information sets.
// Only the upper bound is meaningful; lower is known_lower_bound.
DistanceCertificate upper_bound_search(const GeneratorMatrix& m, const UpperBoundOptions& opts = {});

// Re-checks a certificate's witness: a codeword of the code with weight == upper.
bool witness_valid(const GeneratorMatrix& m, const DistanceCertificate& cert);

unsigned worker_threads(unsigned requested = 0);

}  // namespace cyclequiv
