#pragma once

#include <vector>

#include "pbsn/pb.h"

namespace pbsn {

// Mixed radix base <r_0,...,r_{m-1}> with derived weights w_0=1,
// w_{i+1} = w_i * r_i. The empty base has the single weight 1 (unary).
struct MixedRadixBase {
  std::vector<int> radices;
  std::vector<BigInt> weights;

  static MixedRadixBase from_radices(std::vector<int> radices);

  size_t num_positions() const { return weights.size(); }
  const BigInt& top_weight() const { return weights.back(); }
  friend bool operator==(const MixedRadixBase&, const MixedRadixBase&) = default;
};

// Digits <d_0,...,d_m> of n in the base: 0 <= d_i < r_i for i < m, top digit
// unbounded, sum(d_i * w_i) = n.
std::vector<BigInt> to_digits(BigInt n, const MixedRadixBase& base);

BigInt from_digits(const std::vector<BigInt>& digits, const MixedRadixBase& base);

BigInt digit_sum(BigInt n, const MixedRadixBase& base);

// Searches radix sequences over primes <= max_prime whose top weight stays
// <= max_weight (default: the largest coefficient), minimizing the total
// digit sum of all coefficients. Ties prefer fewer radices, then the
// lexicographically smaller sequence.
MixedRadixBase find_base(const std::vector<BigInt>& coefficients,
                         int max_prime = 17, BigInt max_weight = 0);

// Rewrites "LHS < K" as "LHS + c < d * w_top": d = ceil(K / w_top),
// c = d * w_top - K, so the bound has a single non-zero digit.
struct RhsNorm {
  BigInt c;
  size_t pos;  // top weight position
  BigInt d;
};
RhsNorm normalize_rhs(const BigInt& K, const MixedRadixBase& base);

// Per-weight-position sorter inputs of a canonical constraint: literal x
// appears digit_i(a) times at position i, the normalization constant
// contributes digit_i(c) constant-TRUE entries. Each sequence is in the
// global order (constants first).
struct DigitPlan {
  MixedRadixBase base;
  std::vector<LitSeq> inputs;  // one per weight position
  BigInt norm_constant;
  size_t enforce_pos;
  BigInt enforce_digit;
};

DigitPlan build_digit_plan(const PbConstraint& c, const MixedRadixBase& base);

// 1-based output indices feeding the next position's carry: r, 2r, 3r, ...
std::vector<size_t> carry_indices(size_t n_outputs, int radix);

}  // namespace pbsn
