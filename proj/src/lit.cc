#include "pbsn/lit.h"

#include <algorithm>

namespace pbsn {

bool multiset_contains(const LitSeq& whole, const LitSeq& part) {
  assert(is_canonical(whole) && is_canonical(part));
  size_t i = 0;
  for (Lit l : part) {
    while (i < whole.size() && whole[i] < l) ++i;
    if (i == whole.size() || whole[i] != l) return false;
    ++i;
  }
  return true;
}

LitSeq multiset_subtract(const LitSeq& whole, const LitSeq& part) {
  assert(multiset_contains(whole, part));
  LitSeq out;
  out.reserve(whole.size() - part.size());
  size_t j = 0;
  for (Lit l : whole) {
    if (j < part.size() && part[j] == l)
      ++j;
    else
      out.push_back(l);
  }
  return out;
}

}  // namespace pbsn
