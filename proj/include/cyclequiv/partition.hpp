#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cyclequiv/cosets.hpp"
#include "cyclequiv/equivalence.hpp"

namespace cyclequiv {

// (repeat + 1)^#cosets - 1: every nonempty multiset of the table. Throws
// std::length_error if the count does not fit in 64 bits.
std::uint64_t multiset_count(const CosetTable& table);

// Mixed-radix decoding: digit j (base repeat + 1, least significant first) is
// the multiplicity of coset j. Index 0, the empty multiset, is excluded.
CosetMultiset index_to_multiset(std::uint64_t idx, const CosetTablePtr& table);
std::uint64_t multiset_to_index(const CosetMultiset& ms);

struct PartitionOptions {
  Mode mode = Mode::strict;
  // Refuse (std::length_error) when more multisets than this would be enumerated.
  std::uint64_t budget = std::uint64_t{1} << 24;
  // Only compare candidates against representatives that share cheap affine
  // invariants. The outcome is identical to the plain first-seen scan.
  bool bucket_by_invariants = true;
  // Keep the class index of every enumerated multiset.
  bool record_membership = false;
  // Called every `progress_every` candidates with (done, total).
  std::function<void(std::uint64_t, std::uint64_t)> progress;
  std::uint64_t progress_every = std::uint64_t{1} << 16;
};

struct PartitionRecord {
  CosetTablePtr table;
  Mode mode = Mode::strict;
  std::vector<CosetMultiset> representatives;
  std::vector<std::uint64_t> class_sizes;
  std::uint64_t total_enumerated = 0;
  // Affine tests performed.
  std::uint64_t comparisons = 0;
  // class_of[idx - 1] for enumeration index idx, when requested.
  std::vector<std::uint32_t> class_of;
};

PartitionRecord partition_cyclic(const FieldPtr& field, std::size_t n, const PartitionOptions& opts = {});

// Versioned, line-oriented text: a header, then one representative per line
// (multiset <TAB> class size <TAB> generator polynomial).
void write_partition(std::ostream& out, const PartitionRecord& rec);
PartitionRecord read_partition(std::istream& in);

}  // namespace cyclequiv
