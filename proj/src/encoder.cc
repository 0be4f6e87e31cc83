#include "pbsn/encoder.h"

#include <algorithm>

namespace pbsn {

ConstraintEncoding encode_constraint(ClauseStore& store,
                                     SorterRegistry& registry,
                                     const PbConstraint& c,
                                     const EncodeOptions& opts) {
  assert(c.rel == Rel::Lt && c.rhs >= 1 && !c.terms.empty());

  std::vector<BigInt> coeffs;
  coeffs.reserve(c.terms.size());
  for (const auto& t : c.terms) coeffs.push_back(t.coeff);
  MixedRadixBase base = find_base(coeffs, opts.max_base_prime);
  DigitPlan plan = build_digit_plan(c, base);

  ConstraintEncoding enc;
  enc.base = base;
  enc.norm_constant = plan.norm_constant;
  enc.enforce_pos = plan.enforce_pos;
  enc.enforce_digit = plan.enforce_digit;

  LitSeq carries;
  int top_record = -1;
  LitSeq top_outputs;
  for (size_t pos = 0; pos < base.num_positions(); ++pos) {
    LitSeq inputs = plan.inputs[pos];
    inputs.insert(inputs.end(), carries.begin(), carries.end());
    sort_canonical(inputs);

    // Carries are single-use fresh wires, so only digit literals can be
    // covered by earlier sorters.
    LitSeq query;
    for (Lit l : plan.inputs[pos])
      if (!l.is_const()) query.push_back(l);
    sort_canonical(query);

    size_t k = inputs.size();
    ReuseResult built =
        build_sorter_with_reuse(store, registry, inputs, query, k, opts);
    enc.positions.push_back({inputs, built.net.outputs});

    if (pos + 1 < base.num_positions()) {
      carries.clear();
      for (size_t idx :
           carry_indices(built.net.outputs.size(), base.radices[pos]))
        carries.push_back(built.net.outputs[idx - 1]);
    } else {
      top_record = built.record_id;
      top_outputs = built.net.outputs;
    }
  }

  // LHS + c < d * w_top  <=>  fewer than d of the top sorter's outputs hold.
  if (enc.enforce_digit <= 0) {
    store.add_clause({});
    return enc;
  }
  if (enc.enforce_digit <= BigInt(top_outputs.size())) {
    size_t d = enc.enforce_digit.convert_to<size_t>();
    for (size_t p = d; p <= top_outputs.size(); ++p)
      store.add_clause({~top_outputs[p - 1]});
    registry.install_false_from(top_record, d - 1);
  }
  return enc;
}

EncodeReport encode_instance(ClauseStore& store, SorterRegistry& registry,
                             const PbInstance& instance,
                             const EncodeOptions& opts) {
  store.ensure_vars(instance.num_vars);
  EncodeReport report;
  for (const PbConstraint& raw : instance.constraints) {
    std::int64_t reused_before = store.stats().sorters_reused;
    CanonResult canon = canonicalize(raw);
    if (canon.unsat) {
      store.add_clause({});
    } else {
      for (const PbConstraint& c : canon.constraints)
        encode_constraint(store, registry, c, opts);
    }
    report.per_constraint_reused.push_back(store.stats().sorters_reused -
                                           reused_before);
  }
  report.stats = store.snapshot_stats();
  report.unsat = store.unsat();
  return report;
}

}  // namespace pbsn
