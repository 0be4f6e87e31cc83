#pragma once

#include <vector>

#include "pbsn/sorting_networks.h"

namespace pbsn {

// Merges m top-k sorted sequences of non-increasing lengths into one top-k
// sorted sequence. Long sequences are skipped in early passes while the
// combined top-k size of the next four sequences stays smaller, so they
// enter the merging as late as possible. Passing skip_enabled = false
// forces the plain top-down grouping. Residue collects every wire dropped
// by top-k truncation, in pass order then group order.
NetOutput multiway_merge(ClauseStore& store, std::vector<LitSeq> seqs,
                         size_t k, bool skip_enabled = true);

}  // namespace pbsn
