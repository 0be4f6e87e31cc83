#pragma once

#include <vector>

#include "pbsn/mixed_radix.h"
#include "pbsn/options.h"
#include "pbsn/sorter_reuse.h"

namespace pbsn {

// Per-position trace of one encoded constraint, used by tests and stats.
struct PositionTrace {
  LitSeq inputs;   // digit literals + constants + carries, canonical order
  LitSeq outputs;  // the position's sorter outputs
};

struct ConstraintEncoding {
  MixedRadixBase base;
  std::vector<PositionTrace> positions;
  BigInt norm_constant;
  size_t enforce_pos = 0;
  BigInt enforce_digit = 0;
};

// Encodes one canonical "<" constraint: digit plan, per-position sorters
// with reuse, carry wiring, and unit-clause enforcement at the top weight
// position (~y_p for every p >= d).
ConstraintEncoding encode_constraint(ClauseStore& store,
                                     SorterRegistry& registry,
                                     const PbConstraint& c,
                                     const EncodeOptions& opts);

struct EncodeReport {
  Stats stats;
  std::vector<std::int64_t> per_constraint_reused;  // one per input constraint
  bool unsat = false;
};

// Canonicalizes and encodes every constraint in file order through one
// shared registry. The objective is not encoded here.
EncodeReport encode_instance(ClauseStore& store, SorterRegistry& registry,
                             const PbInstance& instance,
                             const EncodeOptions& opts);

}  // namespace pbsn
