#pragma once

#include <span>
#include <vector>

#include "pbsn/multiway_merge.h"
#include "pbsn/options.h"
#include "pbsn/sorting_networks.h"

namespace pbsn {

// One sorter already present in the encoding: the canonical non-constant
// input multiset, the full output sequence (leading TRUE entries stand for
// constant inputs folded at build time; FALSE entries are installed by
// enforcement), and the selection parameter.
struct SorterRecord {
  LitSeq input;
  LitSeq output;
  size_t k = 0;
};

class SorterRegistry {
 public:
  // Appends a record; returns its id, or -1 when the input is empty
  // (a zero-length candidate can never shrink a cover query).
  int add(LitSeq input, LitSeq output, size_t k);

  // Replaces output positions >= from (0-based) with constant FALSE, so
  // future reusers fold the enforced zeros away.
  void install_false_from(int id, size_t from);

  const std::vector<SorterRecord>& records() const { return records_; }

 private:
  std::vector<SorterRecord> records_;
};

struct CoverResult {
  std::vector<size_t> chosen;  // indices into the candidate list
  LitSeq residual;             // query minus the chosen inputs

  size_t covered_len(std::span<const SorterRecord> records) const {
    size_t n = 0;
    for (size_t i : chosen) n += records[i].input.size();
    return n;
  }
};

// Greedy BooleanSequenceCover: repeatedly picks the longest registered input
// multiset-contained in the remaining query (ties: earliest registration)
// and subtracts it. Only fully sorted records are candidates (a truncated
// output cannot be rewired soundly).
CoverResult greedy_cover(const SorterRegistry& registry, const LitSeq& query);

// Exact maximum-length cover by exhaustive subset search; test oracle only,
// feasible for up to ~20 records.
CoverResult exact_cover_bruteforce(std::span<const SorterRecord> records,
                                   const LitSeq& query);

struct ReuseResult {
  NetOutput net;
  int record_id = -1;  // the registered composite (or fresh) sorter
};

// Builds a sorter over `inputs` (constants and carry wires included). When
// reuse is enabled, `cover_query` (the coverable sub-multiset: digit
// literals only) is matched against the registry; covered literals are
// replaced by the records' outputs, the rest goes through a fresh residual
// sorter, and everything is merged by the multi-way merging network.
ReuseResult build_sorter_with_reuse(ClauseStore& store,
                                    SorterRegistry& registry,
                                    const LitSeq& inputs,
                                    const LitSeq& cover_query, size_t k,
                                    const EncodeOptions& opts);

}  // namespace pbsn
