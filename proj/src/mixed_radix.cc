#include "pbsn/mixed_radix.h"

#include <algorithm>
#include <stdexcept>

namespace pbsn {

namespace {

// A digit becomes a literal multiplicity; anything this large cannot be
// encoded in unary anyway.
constexpr long long kMaxDigit = 10'000'000;

long long digit_to_count(const BigInt& d) {
  if (d > kMaxDigit)
    throw std::overflow_error("mixed-radix digit too large to encode in unary");
  return d.convert_to<long long>();
}

std::vector<int> primes_up_to(int n) {
  std::vector<int> ps;
  for (int p = 2; p <= n; ++p) {
    bool prime = true;
    for (int q = 2; q * q <= p; ++q)
      if (p % q == 0) { prime = false; break; }
    if (prime) ps.push_back(p);
  }
  return ps;
}

struct BaseSearch {
  const std::vector<BigInt>& coeffs;
  std::vector<int> primes;
  BigInt max_weight;

  std::vector<int> best;
  BigInt best_cost;

  BigInt cost_of(const std::vector<int>& radices) const {
    MixedRadixBase b = MixedRadixBase::from_radices(radices);
    BigInt total = 0;
    for (const auto& c : coeffs) total += digit_sum(c, b);
    return total;
  }

  bool better(const BigInt& cost, const std::vector<int>& radices) const {
    if (cost != best_cost) return cost < best_cost;
    if (radices.size() != best.size()) return radices.size() < best.size();
    return radices < best;
  }

  void dfs(std::vector<int>& radices, const BigInt& weight) {
    BigInt cost = cost_of(radices);
    if (better(cost, radices)) {
      best = radices;
      best_cost = cost;
    }
    // Lower bound for any extension: digits below the current top stay
    // fixed, and every coefficient with a non-zero remainder keeps >= 1.
    BigInt fixed = 0;
    long long nonzero_rem = 0;
    {
      MixedRadixBase b = MixedRadixBase::from_radices(radices);
      for (const auto& c : coeffs) {
        BigInt cur = c;
        for (int r : radices) {
          fixed += cur % r;
          cur /= r;
        }
        if (cur > 0) ++nonzero_rem;
      }
    }
    if (fixed + nonzero_rem > best_cost) return;
    if (radices.size() >= 64) return;
    for (int p : primes) {
      BigInt w = weight * p;
      if (w > max_weight) continue;
      radices.push_back(p);
      dfs(radices, w);
      radices.pop_back();
    }
  }
};

}  // namespace

MixedRadixBase MixedRadixBase::from_radices(std::vector<int> radices) {
  MixedRadixBase b;
  b.radices = std::move(radices);
  b.weights.reserve(b.radices.size() + 1);
  BigInt w = 1;
  b.weights.push_back(w);
  for (int r : b.radices) {
    assert(r >= 2);
    w *= r;
    b.weights.push_back(w);
  }
  return b;
}

std::vector<BigInt> to_digits(BigInt n, const MixedRadixBase& base) {
  assert(n >= 0);
  std::vector<BigInt> digits;
  digits.reserve(base.num_positions());
  for (int r : base.radices) {
    digits.push_back(n % r);
    n /= r;
  }
  digits.push_back(n);
  return digits;
}

BigInt from_digits(const std::vector<BigInt>& digits, const MixedRadixBase& base) {
  assert(digits.size() == base.num_positions());
  BigInt v = 0;
  for (size_t i = 0; i < digits.size(); ++i) v += digits[i] * base.weights[i];
  return v;
}

BigInt digit_sum(BigInt n, const MixedRadixBase& base) {
  BigInt total = 0;
  for (int r : base.radices) {
    total += n % r;
    n /= r;
  }
  return total + n;
}

MixedRadixBase find_base(const std::vector<BigInt>& coefficients,
                         int max_prime, BigInt max_weight) {
  if (max_weight == 0)
    for (const auto& c : coefficients) max_weight = std::max(max_weight, c);

  BaseSearch search{coefficients, primes_up_to(max_prime), max_weight, {}, 0};
  search.best_cost = search.cost_of({});
  std::vector<int> radices;
  search.dfs(radices, 1);
  return MixedRadixBase::from_radices(search.best);
}

RhsNorm normalize_rhs(const BigInt& K, const MixedRadixBase& base) {
  assert(K >= 1);
  const BigInt& w = base.top_weight();
  BigInt d = (K + w - 1) / w;
  return {d * w - K, base.num_positions() - 1, d};
}

DigitPlan build_digit_plan(const PbConstraint& c, const MixedRadixBase& base) {
  assert(c.rel == Rel::Lt);
  DigitPlan plan;
  plan.base = base;
  plan.inputs.assign(base.num_positions(), {});

  RhsNorm norm = normalize_rhs(c.rhs, base);
  plan.norm_constant = norm.c;
  plan.enforce_pos = norm.pos;
  plan.enforce_digit = norm.d;

  for (const auto& term : c.terms) {
    std::vector<BigInt> digits = to_digits(term.coeff, base);
    for (size_t i = 0; i < digits.size(); ++i) {
      long long count = digit_to_count(digits[i]);
      plan.inputs[i].insert(plan.inputs[i].end(), count, term.lit);
    }
  }
  std::vector<BigInt> cdigits = to_digits(norm.c, base);
  for (size_t i = 0; i < cdigits.size(); ++i) {
    long long count = digit_to_count(cdigits[i]);
    plan.inputs[i].insert(plan.inputs[i].end(), count, Lit::make_true());
  }
  for (auto& seq : plan.inputs) sort_canonical(seq);
  return plan;
}

std::vector<size_t> carry_indices(size_t n_outputs, int radix) {
  assert(radix >= 2);
  std::vector<size_t> idx;
  for (size_t i = radix; i <= n_outputs; i += radix) idx.push_back(i);
  return idx;
}

}  // namespace pbsn
