#include "pbsn/sorting_networks.h"

#include <algorithm>

namespace pbsn {

namespace {

// A disjunct is a conjunction of up to two wires; the output is implied by
// the disjunction of all disjuncts.
struct Disjunct {
  Lit a;
  Lit b = Lit::make_true();  // TRUE acts as "no second conjunct"
};

// Emits a wire y with clause a & b => y per disjunct. Constants collapse
// structurally: a TRUE disjunct makes the output TRUE, FALSE disjuncts
// vanish, and a single one-literal disjunct passes the wire through.
Lit or_of_ands(ClauseStore& store, std::vector<Disjunct> ds) {
  std::vector<Disjunct> live;
  for (Disjunct& d : ds) {
    if (d.a.is_false() || d.b.is_false()) continue;
    if (d.a.is_true()) std::swap(d.a, d.b);
    if (d.a.is_true()) return Lit::make_true();  // both constants true
    live.push_back(d);
  }
  if (live.empty()) return Lit::make_false();
  if (live.size() == 1 && live[0].b.is_true()) return live[0].a;
  Lit y = store.new_var();
  for (const Disjunct& d : live) {
    if (d.b.is_true())
      store.add_clause({~d.a, y});
    else
      store.add_clause({~d.a, ~d.b, y});
  }
  return y;
}

void emit_subset_clauses(ClauseStore& store, const LitSeq& ins, size_t p,
                         Lit out, size_t start, LitSeq& clause) {
  if (clause.size() == p) {
    clause.push_back(out);
    store.add_clause(clause);
    clause.pop_back();
    return;
  }
  for (size_t i = start; i + (p - clause.size()) <= ins.size(); ++i) {
    clause.push_back(~ins[i]);
    emit_subset_clauses(store, ins, p, out, i + 1, clause);
    clause.pop_back();
  }
}

}  // namespace

NetOutput direct_selector(ClauseStore& store, const LitSeq& inputs, size_t k) {
  size_t trues = 0;
  LitSeq rest;
  for (Lit l : inputs) {
    if (l.is_true())
      ++trues;
    else if (!l.is_false())
      rest.push_back(l);
  }
  NetOutput net;
  size_t n_out = std::min(k, inputs.size());
  for (size_t i = 0; i < n_out && i < trues; ++i)
    net.outputs.push_back(Lit::make_true());

  size_t fresh = std::min(n_out - net.outputs.size(), rest.size());
  for (size_t p = 1; p <= fresh; ++p) {
    Lit y = store.new_var();
    LitSeq clause;
    emit_subset_clauses(store, rest, p, y, 0, clause);
    net.outputs.push_back(y);
  }
  while (net.outputs.size() < n_out) net.outputs.push_back(Lit::make_false());
  // Wires beyond the selection, kept for length accounting only.
  for (size_t i = n_out; i < inputs.size(); ++i)
    net.residue.push_back(inputs[i]);
  return net;
}

NetOutput oe_4combine(ClauseStore& store, const LitSeq& hi, const LitSeq& lo,
                      size_t k) {
  const size_t a = hi.size(), b = lo.size();
  NetOutput net;
  if (b == 0 || k <= 1) {
    // Degenerate: with no odd half (or k <= 1) the head of `hi` is the top.
    size_t n_out = std::min(k, a + b);
    for (size_t i = 0; i < n_out; ++i)
      net.outputs.push_back(i < a ? hi[i] : lo[i - a]);
    for (size_t i = n_out; i < a; ++i) net.residue.push_back(hi[i]);
    for (size_t i = n_out > a ? n_out - a : 0; i < b; ++i)
      net.residue.push_back(lo[i]);
    return net;
  }
  assert(a >= b && a <= b + 4);
  const Lit T = Lit::make_true();
  size_t n_out = std::min(k, a + b);
  net.outputs.push_back(hi[0]);
  for (size_t j = 1; j < n_out; ++j) {
    std::vector<Disjunct> ds;
    size_t i = j / 2;
    if (j % 2 == 0) {
      // out_j <= hi counts E, lo counts O with 0 <= E-O <= 4:
      // total >= j+1  iff  (E>=i+1 & O>=i) or (E>=i+2 & O>=i-1)
      if (i + 1 < a && i < b + 2) ds.push_back({hi[i + 1], i >= 2 ? lo[i - 2] : T});
      if (i < a && i < b + 1) ds.push_back({hi[i], lo[i - 1]});
    } else {
      // total >= j+1  iff  O>=i+1 or (E>=i+2 & O>=i) or (E>=i+3 & O>=i-1)
      if (i > 0 && i + 2 < a) ds.push_back({hi[i + 2], T});
      if (i < b) ds.push_back({lo[i], T});
      if (i + 1 < a && i < b + 1) ds.push_back({hi[i + 1], i >= 1 ? lo[i - 1] : T});
    }
    net.outputs.push_back(or_of_ands(store, std::move(ds)));
  }
  size_t leftover = a + b - n_out;
  for (size_t i = 0; i < leftover; ++i)
    net.residue.push_back(i < b ? lo[b - 1 - i] : hi[a - 1 - (i - b)]);
  return net;
}

NetOutput oe_4merge(ClauseStore& store, std::span<const LitSeq> seqs, size_t k) {
  assert(seqs.size() <= 4);
  NetOutput net;
  std::vector<LitSeq> live;
  for (const LitSeq& s : seqs) {
    if (s.empty()) continue;
    // Positions beyond k are dominated and can never enter the top k.
    LitSeq t(s.begin(), s.begin() + std::min(s.size(), k));
    for (size_t i = k; i < s.size(); ++i) net.residue.push_back(s[i]);
    if (!t.empty()) live.push_back(std::move(t));
  }
  std::stable_sort(live.begin(), live.end(),
                   [](const LitSeq& x, const LitSeq& y) {
                     return x.size() > y.size();
                   });
  if (live.empty()) return net;
  if (live.size() == 1) {
    net.outputs = std::move(live[0]);
    return net;
  }
  if (live[0].size() == 1) {
    // Up to 4 single wires: a direct selector is the cheapest merger.
    LitSeq singles;
    for (const LitSeq& s : live) singles.push_back(s[0]);
    NetOutput d = direct_selector(store, singles, std::min(k, singles.size()));
    net.outputs = std::move(d.outputs);
    for (Lit l : d.residue) net.residue.push_back(l);
    return net;
  }

  std::vector<LitSeq> evens(live.size()), odds(live.size());
  for (size_t s = 0; s < live.size(); ++s)
    for (size_t i = 0; i < live[s].size(); ++i)
      (i % 2 == 0 ? evens[s] : odds[s]).push_back(live[s][i]);

  NetOutput hi = oe_4merge(store, evens, k / 2 + 2);
  NetOutput lo = oe_4merge(store, odds, k / 2);
  NetOutput comb = oe_4combine(store, hi.outputs, lo.outputs, k);

  net.outputs = std::move(comb.outputs);
  for (Lit l : hi.residue) net.residue.push_back(l);
  for (Lit l : lo.residue) net.residue.push_back(l);
  for (Lit l : comb.residue) net.residue.push_back(l);
  return net;
}

NetOutput select_k(ClauseStore& store, const LitSeq& inputs, size_t k,
                   int block_size) {
  assert(block_size >= 1);
  NetOutput net;
  if (k == 0) {
    net.residue = inputs;
    return net;
  }
  if (k == 1 || inputs.size() <= size_t(block_size))
    return direct_selector(store, inputs, std::min(k, inputs.size()));

  std::vector<LitSeq> seqs;
  for (size_t start = 0; start < inputs.size(); start += block_size) {
    LitSeq block(inputs.begin() + start,
                 inputs.begin() + std::min(inputs.size(), start + block_size));
    NetOutput d =
        direct_selector(store, block, std::min(block.size(), k));
    seqs.push_back(std::move(d.outputs));
    for (Lit l : d.residue) net.residue.push_back(l);
  }
  while (seqs.size() > 1) {
    std::vector<LitSeq> next;
    for (size_t g = 0; g < seqs.size(); g += 4) {
      size_t end = std::min(seqs.size(), g + 4);
      NetOutput m = oe_4merge(
          store, std::span<const LitSeq>(seqs.data() + g, end - g), k);
      next.push_back(std::move(m.outputs));
      for (Lit l : m.residue) net.residue.push_back(l);
    }
    seqs = std::move(next);
  }
  net.outputs = std::move(seqs[0]);
  return net;
}

}  // namespace pbsn
