#include "pbsn/optimize.h"

#include <chrono>

namespace pbsn {

BigInt eval_objective(const std::vector<PbTerm>& objective,
                      const std::vector<bool>& model) {
  BigInt value = 0;
  for (const auto& t : objective) {
    if (t.lit.is_true()) {
      value += t.coeff;
    } else if (!t.lit.is_false()) {
      bool assigned = size_t(t.lit.var()) <= model.size() &&
                      model[size_t(t.lit.var()) - 1];
      if (assigned != t.lit.negated()) value += t.coeff;
    }
  }
  return value;
}

OptimizeResult optimize(const PbInstance& instance, const OptimizeOptions& opts,
                        const std::function<void(const BigInt&)>& on_improve) {
  OptimizeResult res;
  auto start = std::chrono::steady_clock::now();
  auto remaining = [&]() -> double {
    if (opts.timeout_seconds <= 0) return 0;
    double used = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start).count();
    return std::max(1e-3, opts.timeout_seconds - used);
  };
  auto timed_out = [&]() {
    return opts.timeout_seconds > 0 &&
           std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start).count() >= opts.timeout_seconds;
  };
  auto run_solver = [&](const ClauseStore& store) {
    if (!opts.external_solver.empty())
      return solve_external(store, opts.external_solver, remaining());
    SolveBudget budget;
    budget.seconds = remaining();
    return solve(store, budget);
  };

  ClauseStore store;
  SorterRegistry registry;
  encode_instance(store, registry, instance, opts.encode);

  for (;;) {
    SolveOutcome outcome = run_solver(store);
    res.stats = store.snapshot_stats();
    if (outcome.status == SolveStatus::Unsat) {
      if (res.best_model.empty()) {
        res.status = SolveStatus::Unsat;
      } else {
        res.status = SolveStatus::Sat;
        res.optimum_proved = true;
      }
      return res;
    }
    if (outcome.status == SolveStatus::Unknown) {
      res.status = res.best_model.empty() ? SolveStatus::Unknown : SolveStatus::Sat;
      return res;
    }

    res.best_model.assign(outcome.model.begin(),
                          outcome.model.begin() +
                              std::min(outcome.model.size(),
                                       size_t(instance.num_vars)));
    res.best_model.resize(size_t(instance.num_vars), false);
    res.status = SolveStatus::Sat;
    if (!instance.objective) return res;  // plain decision instance

    BigInt value = eval_objective(*instance.objective, res.best_model);
    res.best_value = value;
    if (on_improve) on_improve(value);
    if (timed_out()) return res;

    // Tighten: objective < value, encoded through the shared registry.
    PbConstraint bound{*instance.objective, Rel::Lt, value};
    CanonResult canon = canonicalize(bound);
    if (canon.unsat) {
      res.optimum_proved = true;  // nothing can beat the current value
      return res;
    }
    if (canon.constraints.empty()) return res;  // cannot happen: value is attained
    for (const PbConstraint& c : canon.constraints)
      encode_constraint(store, registry, c, opts.encode);
    if (store.unsat()) {
      res.optimum_proved = true;
      res.stats = store.snapshot_stats();
      return res;
    }
  }
}

}  // namespace pbsn
