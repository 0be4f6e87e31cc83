#include "pbsn/multiway_merge.h"

#include <algorithm>

namespace pbsn {

namespace {

bool non_increasing(const std::vector<LitSeq>& seqs) {
  for (size_t i = 0; i + 1 < seqs.size(); ++i)
    if (seqs[i].size() < seqs[i + 1].size()) return false;
  return true;
}

}  // namespace

NetOutput multiway_merge(ClauseStore& store, std::vector<LitSeq> seqs,
                         size_t k, bool skip_enabled) {
  assert(!seqs.empty());
  assert(non_increasing(seqs));
  NetOutput net;

  while (seqs.size() > 1) {
    const size_t m = seqs.size();
    size_t s = 0;
    if (skip_enabled && m > 4) {
      auto cap = [&](size_t i) { return std::min(seqs[i].size(), k); };
      for (size_t j = m - 4; j >= 1; --j) {  // largest qualifying index
        if (cap(j - 1) > cap(j) + cap(j + 1) + cap(j + 2) + cap(j + 3)) {
          s = j;
          break;
        }
      }
    }
    const size_t sp = m - ((m - s) % 4);

    std::vector<LitSeq> next(seqs.begin(), seqs.begin() + s);
    for (size_t g = s; g < m; g += 4) {
      size_t end = g < sp ? g + 4 : m;  // remainder group after sp
      NetOutput merged = oe_4merge(
          store, std::span<const LitSeq>(seqs.data() + g, end - g), k);
      next.push_back(std::move(merged.outputs));
      for (Lit l : merged.residue) net.residue.push_back(l);
      if (end == m) break;
    }
    assert(non_increasing(next));
    seqs = std::move(next);
  }
  net.outputs = std::move(seqs[0]);
  return net;
}

}  // namespace pbsn
