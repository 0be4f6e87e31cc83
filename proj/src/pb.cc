#include "pbsn/pb.h"

#include <algorithm>

namespace pbsn {

namespace {

// Removes constants and zero coefficients, flips negative coefficients via
// -a*x = a*~x - a, adjusting rhs so the relation is unchanged.
void positivize(std::vector<PbTerm>& terms, BigInt& rhs) {
  std::vector<PbTerm> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    if (t.lit.is_true()) {
      rhs -= t.coeff;
      continue;
    }
    if (t.lit.is_false()) continue;
    if (t.coeff < 0) {
      out.push_back({-t.coeff, ~t.lit});
      rhs += -t.coeff;
    } else {
      out.push_back(t);
    }
  }
  terms = std::move(out);
}

// Assumes positive coefficients. Sums duplicates, cancels x/~x pairs by
// min-coefficient cancellation, drops zeros; terms end up in global order.
void merge_terms(std::vector<PbTerm>& terms, BigInt& rhs) {
  std::sort(terms.begin(), terms.end(), [](const PbTerm& a, const PbTerm& b) {
    return a.lit < b.lit;
  });
  std::vector<PbTerm> merged;
  for (const auto& t : terms) {
    if (!merged.empty() && merged.back().lit == t.lit)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(t);
  }
  // Complementary literals are adjacent after the sort (codes 2v, 2v+1).
  std::vector<PbTerm> out;
  for (size_t i = 0; i < merged.size(); ++i) {
    if (i + 1 < merged.size() && !merged[i].lit.is_const() &&
        merged[i + 1].lit == ~merged[i].lit) {
      BigInt a = merged[i].coeff, b = merged[i + 1].coeff;
      BigInt common = std::min(a, b);
      rhs -= common;
      if (a > b)
        out.push_back({a - b, merged[i].lit});
      else if (b > a)
        out.push_back({b - a, merged[i + 1].lit});
      ++i;
    } else {
      out.push_back(merged[i]);
    }
  }
  terms = std::move(out);
}

void canon_lt(std::vector<PbTerm> terms, BigInt rhs, CanonResult& res) {
  positivize(terms, rhs);
  merge_terms(terms, rhs);
  if (rhs <= 0) {
    res.unsat = true;
    return;
  }
  BigInt sum = 0;
  for (const auto& t : terms) sum += t.coeff;
  if (rhs > sum) return;  // trivially true
  res.constraints.push_back({std::move(terms), Rel::Lt, std::move(rhs)});
}

void canon_ge(std::vector<PbTerm> terms, BigInt rhs, CanonResult& res) {
  positivize(terms, rhs);
  // sum a_i*l_i >= k  <=>  sum a_i*~l_i < sum(a) - k + 1
  BigInt sum = 0;
  for (auto& t : terms) {
    sum += t.coeff;
    t.lit = ~t.lit;
  }
  canon_lt(std::move(terms), sum - rhs + 1, res);
}

}  // namespace

CanonResult canonicalize(const PbConstraint& c) {
  CanonResult res;
  switch (c.rel) {
    case Rel::Lt:
      canon_lt(c.terms, c.rhs, res);
      break;
    case Rel::Le:
      canon_lt(c.terms, c.rhs + 1, res);
      break;
    case Rel::Ge:
      canon_ge(c.terms, c.rhs, res);
      break;
    case Rel::Gt:
      canon_ge(c.terms, c.rhs + 1, res);
      break;
    case Rel::Eq: {
      canon_lt(c.terms, c.rhs + 1, res);
      canon_ge(c.terms, c.rhs, res);
      break;
    }
  }
  return res;
}

PbConstraint merge_duplicate_literals(const PbConstraint& c) {
  PbConstraint out = c;
  merge_terms(out.terms, out.rhs);
  return out;
}

}  // namespace pbsn
