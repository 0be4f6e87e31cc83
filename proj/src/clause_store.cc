#include "pbsn/clause_store.h"

#include <algorithm>

namespace pbsn {

void ClauseStore::add_clause(std::span<const Lit> lits) {
  LitSeq folded(lits.begin(), lits.end());
  std::sort(folded.begin(), folded.end());
  LitSeq kept;
  kept.reserve(folded.size());
  for (size_t i = 0; i < folded.size(); ++i) {
    Lit l = folded[i];
    if (l.is_true()) return;   // tautology
    if (l.is_false()) continue;
    if (!kept.empty() && kept.back() == l) continue;          // duplicate
    if (!kept.empty() && kept.back() == ~l) return;           // l v ~l
    kept.push_back(l);
  }
  if (kept.empty()) {
    if (!unsat_) {
      unsat_ = true;
      clauses_.emplace_back();  // the empty clause, recorded once
      ++stats_.clauses_added;
    }
    return;
  }
  clauses_.push_back(std::move(kept));
  ++stats_.clauses_added;
}

}  // namespace pbsn
