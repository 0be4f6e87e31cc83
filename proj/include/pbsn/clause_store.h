#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pbsn/lit.h"

namespace pbsn {

struct Stats {
  std::int64_t vars_created = 0;
  std::int64_t clauses_added = 0;
  std::int64_t sorters_built = 0;
  std::int64_t sorters_reused = 0;
  std::int64_t reuse_covered_inputs = 0;
};

// Fresh-variable allocator and clause sink. Clauses are folded on entry:
// TRUE literals or complementary pairs drop the clause, FALSE literals and
// duplicates are removed, and an empty result records the empty clause once
// and raises the unsat flag. Stored clauses are sorted by the global order;
// clause order is insertion order.
class ClauseStore {
 public:
  Lit new_var() {
    ++stats_.vars_created;
    return Lit::positive(next_var_++);
  }

  void add_clause(std::span<const Lit> lits);
  void add_clause(std::initializer_list<Lit> lits) {
    add_clause(std::span<const Lit>(lits.begin(), lits.size()));
  }

  // Reserves variable ids 1..n (instance variables precede encoding
  // auxiliaries); does not count into vars_created.
  void ensure_vars(int n) {
    if (next_var_ <= n) next_var_ = n + 1;
  }

  int num_vars() const { return next_var_ - 1; }
  bool unsat() const { return unsat_; }
  const std::vector<LitSeq>& clauses() const { return clauses_; }
  const Stats& stats() const { return stats_; }
  Stats& stats() { return stats_; }
  Stats snapshot_stats() const { return stats_; }

 private:
  int next_var_ = 1;
  std::vector<LitSeq> clauses_;
  Stats stats_;
  bool unsat_ = false;
};

}  // namespace pbsn
