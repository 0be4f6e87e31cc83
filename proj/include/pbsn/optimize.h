#pragma once

#include <functional>
#include <optional>
#include <string>

#include "pbsn/encoder.h"
#include "pbsn/solver.h"

namespace pbsn {

struct OptimizeOptions {
  EncodeOptions encode;
  std::string external_solver;  // empty: built-in CDCL
  double timeout_seconds = 0;   // total wall budget, 0 = unlimited
};

struct OptimizeResult {
  SolveStatus status = SolveStatus::Unknown;
  bool optimum_proved = false;
  std::optional<BigInt> best_value;  // set iff the instance has an objective
                                     // and some model was found
  std::vector<bool> best_model;      // instance variables x1..x<num_vars>
  Stats stats;
};

// Iterative linear search: encode the hard constraints once, then keep
// adding "objective < best" through the same registry (consecutive bound
// encodings share nearly all sorter inputs) until the formula goes
// unsatisfiable. Improvements are reported through on_improve.
OptimizeResult optimize(const PbInstance& instance, const OptimizeOptions& opts,
                        const std::function<void(const BigInt&)>& on_improve = {});

BigInt eval_objective(const std::vector<PbTerm>& objective,
                      const std::vector<bool>& model);

}  // namespace pbsn
