#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pbsn/clause_store.h"

namespace pbsn {

enum class SolveStatus { Sat, Unsat, Unknown };

struct SolveOutcome {
  SolveStatus status = SolveStatus::Unknown;
  std::vector<bool> model;  // model[v-1] for var v; set iff status == Sat
  std::string diagnostic;
};

struct SolveBudget {
  double seconds = 0;          // 0 = unlimited
  std::int64_t conflicts = 0;  // 0 = unlimited
};

// Built-in CDCL search: two-watched-literal propagation, activity-based
// decisions, first-UIP learning, Luby restarts, phase saving.
SolveOutcome solve_cnf(const std::vector<LitSeq>& clauses, int num_vars,
                       const SolveBudget& budget = {});

SolveOutcome solve(const ClauseStore& store, const SolveBudget& budget = {});

// External back end: serializes the store to a temp DIMACS file, spawns
// argv = [solver_path, dimacs_path], parses `s`/`v` lines; the exit status
// is ignored. Wall-clock budget enforced by killing the child.
SolveOutcome solve_external(const ClauseStore& store,
                            const std::string& solver_path,
                            double timeout_seconds);

}  // namespace pbsn
