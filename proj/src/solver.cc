#include "pbsn/solver.h"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace pbsn {

namespace {

// Literals are Lit codes: 2*var (positive) / 2*var+1 (negative).
class Cdcl {
 public:
  Cdcl(int num_vars, const SolveBudget& budget)
      : nv_(num_vars), budget_(budget) {
    value_.assign(nv_ + 1, 0);
    reason_.assign(nv_ + 1, -1);
    level_.assign(nv_ + 1, 0);
    activity_.assign(nv_ + 1, 0.0);
    phase_.assign(nv_ + 1, false);
    seen_.assign(nv_ + 1, 0);
    watches_.assign(2 * (nv_ + 1), {});
  }

  // Returns false if the formula is trivially conflicting at level 0.
  bool add_clause(const LitSeq& lits) {
    std::vector<int> cl;
    cl.reserve(lits.size());
    for (Lit l : lits) cl.push_back(l.code());
    if (cl.empty()) return false;
    if (cl.size() == 1) {
      int v = val(cl[0]);
      if (v < 0) return false;
      if (v == 0) enqueue(cl[0], -1);
      return true;
    }
    int id = int(clauses_.size());
    clauses_.push_back(std::move(cl));
    watches_[clauses_[id][0]].push_back(id);
    watches_[clauses_[id][1]].push_back(id);
    return true;
  }

  SolveOutcome search() {
    SolveOutcome out;
    auto start = std::chrono::steady_clock::now();
    std::int64_t conflicts = 0;
    std::int64_t restart_at = luby(restarts_) * kRestartBase;

    for (;;) {
      int confl = propagate();
      if (confl >= 0) {
        ++conflicts;
        if (level() == 0) {
          out.status = SolveStatus::Unsat;
          return out;
        }
        std::vector<int> learnt;
        int bt = analyze(confl, learnt);
        cancel_until(bt);
        attach_learnt(learnt);
        var_inc_ /= kActivityDecay;
        if ((conflicts & 511) == 0 && out_of_budget(start, conflicts)) {
          out.status = SolveStatus::Unknown;
          out.diagnostic = "budget exhausted";
          return out;
        }
        if (conflicts >= restart_at) {
          ++restarts_;
          restart_at = conflicts + luby(restarts_) * kRestartBase;
          cancel_until(0);
        }
      } else {
        int v = pick_branch_var();
        if (v == 0) {
          out.status = SolveStatus::Sat;
          out.model.resize(nv_);
          for (int i = 1; i <= nv_; ++i) out.model[i - 1] = value_[i] > 0;
          return out;
        }
        trail_lim_.push_back(int(trail_.size()));
        enqueue(2 * v + (phase_[v] ? 0 : 1), -1);
      }
    }
  }

 private:
  static constexpr double kActivityDecay = 0.95;
  static constexpr std::int64_t kRestartBase = 64;

  int nv_;
  SolveBudget budget_;
  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<int>> watches_;  // by watched literal code
  std::vector<int8_t> value_;              // by var: 0 undef, +1 true, -1 false
  std::vector<int> reason_;                // by var: clause id or -1
  std::vector<int> level_;                 // by var
  std::vector<double> activity_;
  std::vector<char> phase_;
  std::vector<char> seen_;
  std::vector<int> trail_;
  std::vector<int> trail_lim_;
  size_t qhead_ = 0;
  double var_inc_ = 1.0;
  std::int64_t restarts_ = 0;

  int level() const { return int(trail_lim_.size()); }

  int val(int code) const {
    int v = value_[code >> 1];
    return (code & 1) ? -v : v;
  }

  void enqueue(int code, int from) {
    int v = code >> 1;
    value_[v] = (code & 1) ? -1 : 1;
    reason_[v] = from;
    level_[v] = level();
    trail_.push_back(code);
  }

  void bump(int v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
      for (int i = 1; i <= nv_; ++i) activity_[i] *= 1e-100;
      var_inc_ *= 1e-100;
    }
  }

  // Returns the conflicting clause id, or -1.
  int propagate() {
    while (qhead_ < trail_.size()) {
      int p = trail_[qhead_++];
      int falsified = p ^ 1;
      std::vector<int>& ws = watches_[falsified];
      size_t keep = 0;
      for (size_t i = 0; i < ws.size(); ++i) {
        int cid = ws[i];
        std::vector<int>& cl = clauses_[cid];
        if (cl[0] == falsified) std::swap(cl[0], cl[1]);
        if (val(cl[0]) > 0) {
          ws[keep++] = cid;
          continue;
        }
        bool moved = false;
        for (size_t j = 2; j < cl.size(); ++j) {
          if (val(cl[j]) >= 0) {
            std::swap(cl[1], cl[j]);
            watches_[cl[1]].push_back(cid);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[keep++] = cid;
        if (val(cl[0]) < 0) {
          for (++i; i < ws.size(); ++i) ws[keep++] = ws[i];
          ws.resize(keep);
          return cid;
        }
        enqueue(cl[0], cid);
      }
      ws.resize(keep);
    }
    return -1;
  }

  int analyze(int confl, std::vector<int>& learnt) {
    learnt.push_back(-1);  // slot for the asserting literal
    int counter = 0;
    int p = -1;
    int index = int(trail_.size()) - 1;
    do {
      const std::vector<int>& cl = clauses_[confl];
      for (size_t j = (p == -1 ? 0 : 1); j < cl.size(); ++j) {
        int q = cl[j];
        int v = q >> 1;
        if (!seen_[v] && level_[v] > 0) {
          seen_[v] = 1;
          bump(v);
          if (level_[v] >= level())
            ++counter;
          else
            learnt.push_back(q);
        }
      }
      while (!seen_[trail_[index] >> 1]) --index;
      p = trail_[index--];
      seen_[p >> 1] = 0;
      --counter;
      if (counter > 0) confl = reason_[p >> 1];
    } while (counter > 0);
    learnt[0] = p ^ 1;

    int bt = 0;
    if (learnt.size() > 1) {
      size_t max_i = 1;
      for (size_t i = 2; i < learnt.size(); ++i)
        if (level_[learnt[i] >> 1] > level_[learnt[max_i] >> 1]) max_i = i;
      std::swap(learnt[1], learnt[max_i]);
      bt = level_[learnt[1] >> 1];
    }
    for (int q : learnt) seen_[q >> 1] = 0;
    return bt;
  }

  void attach_learnt(std::vector<int>& learnt) {
    if (learnt.size() == 1) {
      enqueue(learnt[0], -1);
      return;
    }
    int id = int(clauses_.size());
    clauses_.push_back(learnt);
    watches_[learnt[0]].push_back(id);
    watches_[learnt[1]].push_back(id);
    enqueue(learnt[0], id);
  }

  void cancel_until(int lvl) {
    if (level() <= lvl) return;
    for (int i = int(trail_.size()) - 1; i >= trail_lim_[lvl]; --i) {
      int v = trail_[i] >> 1;
      phase_[v] = value_[v] > 0;
      value_[v] = 0;
      reason_[v] = -1;
    }
    trail_.resize(trail_lim_[lvl]);
    trail_lim_.resize(lvl);
    qhead_ = trail_.size();
  }

  int pick_branch_var() const {
    int best = 0;
    double best_act = -1.0;
    for (int v = 1; v <= nv_; ++v)
      if (value_[v] == 0 && activity_[v] > best_act) {
        best = v;
        best_act = activity_[v];
      }
    return best;
  }

  bool out_of_budget(std::chrono::steady_clock::time_point start,
                     std::int64_t conflicts) const {
    if (budget_.conflicts > 0 && conflicts >= budget_.conflicts) return true;
    if (budget_.seconds > 0) {
      auto elapsed = std::chrono::duration<double>(
          std::chrono::steady_clock::now() - start);
      if (elapsed.count() >= budget_.seconds) return true;
    }
    return false;
  }

  // Luby sequence 1,1,2,1,1,2,4,... for x = 0,1,2,...
  static std::int64_t luby(std::int64_t x) {
    std::int64_t size = 1, seq = 0;
    while (size < x + 1) {
      ++seq;
      size = 2 * size + 1;
    }
    while (size - 1 != x) {
      size = (size - 1) >> 1;
      --seq;
      x = x % size;
    }
    return std::int64_t(1) << seq;
  }
};

}  // namespace

SolveOutcome solve_cnf(const std::vector<LitSeq>& clauses, int num_vars,
                       const SolveBudget& budget) {
  Cdcl solver(num_vars, budget);
  for (const LitSeq& cl : clauses) {
    if (!solver.add_clause(cl)) {
      SolveOutcome out;
      out.status = SolveStatus::Unsat;
      return out;
    }
  }
  return solver.search();
}

SolveOutcome solve(const ClauseStore& store, const SolveBudget& budget) {
  if (store.unsat()) {
    SolveOutcome out;
    out.status = SolveStatus::Unsat;
    return out;
  }
  return solve_cnf(store.clauses(), store.num_vars(), budget);
}

}  // namespace pbsn
