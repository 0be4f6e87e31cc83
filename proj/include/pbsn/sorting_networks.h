#pragma once

#include <span>
#include <vector>

#include "pbsn/clause_store.h"
#include "pbsn/lit.h"

namespace pbsn {

// Output of a clause-emitting network under the one-directional "at least"
// semantics: outputs[p-1] is entailed whenever >= p inputs are true.
// `residue` holds the wires dropped by top-k truncation so that
// |outputs| + |residue| equals the total input length (the permutation
// property of a merger); residue wires never feed enforcement or carries.
struct NetOutput {
  LitSeq outputs;
  LitSeq residue;
};

// Direct selection network of order (n, k): for every p <= k and every
// p-subset of inputs, emits the clause x_{i_1} & ... & x_{i_p} => y_p.
// Constant TRUE inputs shift the outputs (output 1 becomes TRUE, ...);
// FALSE inputs pad the tail with FALSE.
NetOutput direct_selector(ClauseStore& store, const LitSeq& inputs, size_t k);

// Combine layer of the 4-way odd-even merge: `hi` and `lo` are the merged
// even- and odd-indexed halves (|lo| <= |hi| <= |lo| + 4); outputs the top
// min(k, |hi|+|lo|) of their interleave.
NetOutput oe_4combine(ClauseStore& store, const LitSeq& hi, const LitSeq& lo,
                      size_t k);

// m-merger of order (n, k) for 1..4 top-k sorted sequences: output is top-k
// sorted and count-preserving; non-top-k wires are returned as residue.
NetOutput oe_4merge(ClauseStore& store, std::span<const LitSeq> seqs, size_t k);

// 4-Way Merge Selection Network: direct selectors of order
// (block_size, min(block_size, k)) on consecutive blocks, then repeated
// 4-at-a-time merging with top-k truncation until one sequence remains.
NetOutput select_k(ClauseStore& store, const LitSeq& inputs, size_t k,
                   int block_size = 5);

}  // namespace pbsn
