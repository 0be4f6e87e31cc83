#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "pbsn/lit.h"

namespace pbsn {

using BigInt = boost::multiprecision::cpp_int;

struct PbTerm {
  BigInt coeff;
  Lit lit;
  friend bool operator==(const PbTerm&, const PbTerm&) = default;
};

enum class Rel { Lt, Le, Eq, Ge, Gt };

// Linear inequality over Boolean literals: sum(coeff_i * lit_i) REL rhs.
// Canonical form (the encoder's input) is: relation Lt, all coefficients
// positive, rhs >= 1, no constant literals, each variable at most once.
struct PbConstraint {
  std::vector<PbTerm> terms;
  Rel rel = Rel::Lt;
  BigInt rhs = 0;
  friend bool operator==(const PbConstraint&, const PbConstraint&) = default;

  BigInt coeff_sum() const {
    BigInt s = 0;
    for (const auto& t : terms) s += t.coeff;
    return s;
  }
};

struct PbInstance {
  std::vector<PbConstraint> constraints;
  std::optional<std::vector<PbTerm>> objective;  // minimized
  int num_vars = 0;
  friend bool operator==(const PbInstance&, const PbInstance&) = default;
};

struct CanonResult {
  std::vector<PbConstraint> constraints;  // each in canonical "<" form
  bool unsat = false;  // no assignment can satisfy the original
};

// Rewrites an arbitrary constraint into 0, 1 or 2 canonical "<" constraints
// jointly equisatisfiable with it. Trivially true constraints are dropped;
// an unsatisfiable one sets the unsat flag.
CanonResult canonicalize(const PbConstraint& c);

// Sums coefficients of identical literals and cancels complementary pairs
// (a*x + b*~x = (a-b)*x + b for a >= b, rhs adjusted). Terms come out in
// the global literal order, zero coefficients removed.
PbConstraint merge_duplicate_literals(const PbConstraint& c);

}  // namespace pbsn
