#include "pbsn/sorter_reuse.h"

#include <algorithm>

namespace pbsn {

namespace {

// Records whose output was truncated below the input length cannot report
// every count and would make a composite undercount. The encoder only
// produces fully sorted records, so this only guards direct API use.
bool fully_sorted(const SorterRecord& r) {
  size_t lead = 0;
  while (lead < r.output.size() && r.output[lead].is_true()) ++lead;
  return r.output.size() - lead >= r.input.size();
}

// Output with build-time constant-TRUE prefix removed and truncated to k:
// the at-least sequence over the record's real inputs.
LitSeq stripped_output(const SorterRecord& r, size_t k) {
  size_t lead = 0;
  while (lead < r.output.size() && r.output[lead].is_true()) ++lead;
  LitSeq out(r.output.begin() + lead, r.output.end());
  if (out.size() > k) out.resize(k);
  return out;
}

}  // namespace

int SorterRegistry::add(LitSeq input, LitSeq output, size_t k) {
  assert(is_canonical(input));
  if (input.empty()) return -1;
  records_.push_back({std::move(input), std::move(output), k});
  return int(records_.size()) - 1;
}

void SorterRegistry::install_false_from(int id, size_t from) {
  if (id < 0) return;
  SorterRecord& r = records_[size_t(id)];
  for (size_t i = from; i < r.output.size(); ++i)
    r.output[i] = Lit::make_false();
}

CoverResult greedy_cover(const SorterRegistry& registry, const LitSeq& query) {
  assert(is_canonical(query));
  CoverResult res;
  res.residual = query;
  std::vector<bool> used(registry.records().size(), false);
  for (;;) {
    int best = -1;
    size_t best_len = 0;
    for (size_t i = 0; i < registry.records().size(); ++i) {
      const SorterRecord& r = registry.records()[i];
      if (used[i] || r.input.empty() || !fully_sorted(r)) continue;
      if (r.input.size() <= best_len) continue;  // earliest wins ties
      if (multiset_contains(res.residual, r.input)) {
        best = int(i);
        best_len = r.input.size();
      }
    }
    if (best < 0) break;
    used[size_t(best)] = true;
    res.chosen.push_back(size_t(best));
    res.residual =
        multiset_subtract(res.residual, registry.records()[size_t(best)].input);
  }
  return res;
}

CoverResult exact_cover_bruteforce(std::span<const SorterRecord> records,
                                   const LitSeq& query) {
  assert(is_canonical(query));
  CoverResult best;
  best.residual = query;
  size_t best_len = 0;

  std::vector<size_t> chosen;
  LitSeq remaining = query;

  // Suffix length sums for pruning.
  std::vector<size_t> suffix(records.size() + 1, 0);
  for (size_t i = records.size(); i-- > 0;)
    suffix[i] = suffix[i + 1] + records[i].input.size();

  auto search = [&](auto&& self, size_t i, size_t len) -> void {
    if (len > best_len) {
      best_len = len;
      best.chosen = chosen;
      best.residual = remaining;
    }
    if (i == records.size() || len + suffix[i] <= best_len) return;
    if (!records[i].input.empty() &&
        multiset_contains(remaining, records[i].input)) {
      LitSeq saved = remaining;
      remaining = multiset_subtract(remaining, records[i].input);
      chosen.push_back(i);
      self(self, i + 1, len + records[i].input.size());
      chosen.pop_back();
      remaining = std::move(saved);
    }
    self(self, i + 1, len);
  };
  search(search, 0, 0);
  return best;
}

ReuseResult build_sorter_with_reuse(ClauseStore& store,
                                    SorterRegistry& registry,
                                    const LitSeq& inputs,
                                    const LitSeq& cover_query, size_t k,
                                    const EncodeOptions& opts) {
  assert(is_canonical(inputs));
  LitSeq no_consts;
  for (Lit l : inputs)
    if (!l.is_const()) no_consts.push_back(l);

  CoverResult cover;
  if (opts.reuse) cover = greedy_cover(registry, cover_query);

  ReuseResult res;
  if (cover.chosen.empty()) {
    res.net = select_k(store, inputs, k, opts.block_size);
    ++store.stats().sorters_built;
    res.record_id = registry.add(std::move(no_consts), res.net.outputs, k);
    return res;
  }

  LitSeq covered;
  for (size_t id : cover.chosen)
    for (Lit l : registry.records()[id].input) covered.push_back(l);
  sort_canonical(covered);
  store.stats().sorters_reused += std::int64_t(cover.chosen.size());
  store.stats().reuse_covered_inputs += std::int64_t(covered.size());

  LitSeq residual_inputs = multiset_subtract(inputs, covered);

  std::vector<LitSeq> seqs;
  if (!residual_inputs.empty()) {
    size_t rk = std::min(k, residual_inputs.size());
    NetOutput rnet = select_k(store, residual_inputs, rk, opts.block_size);
    ++store.stats().sorters_built;
    LitSeq rreal;
    for (Lit l : residual_inputs)
      if (!l.is_const()) rreal.push_back(l);
    registry.add(std::move(rreal), rnet.outputs, rk);
    for (Lit l : rnet.residue) res.net.residue.push_back(l);
    seqs.push_back(std::move(rnet.outputs));
  }
  for (size_t id : cover.chosen)
    seqs.push_back(stripped_output(registry.records()[id], k));

  std::stable_sort(seqs.begin(), seqs.end(),
                   [](const LitSeq& x, const LitSeq& y) {
                     return x.size() > y.size();
                   });
  NetOutput merged = multiway_merge(store, std::move(seqs), k, opts.skip);
  res.net.outputs = std::move(merged.outputs);
  for (Lit l : merged.residue) res.net.residue.push_back(l);
  res.record_id = registry.add(std::move(no_consts), res.net.outputs, k);
  return res;
}

}  // namespace pbsn
