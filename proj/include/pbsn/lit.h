#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace pbsn {

// A literal is a variable (id >= 1) with a polarity, or one of the two
// constants TRUE/FALSE. Encoded as an int: FALSE = 0, TRUE = 1, and
// 2*var + negated for everything else. Negation is XOR with 1, which also
// maps TRUE <-> FALSE. The encoding order is the global literal ordering:
// constants first, then (var ascending, positive before negative).
class Lit {
 public:
  constexpr Lit() : code_(0) {}

  static constexpr Lit make_false() { return Lit(0); }
  static constexpr Lit make_true() { return Lit(1); }
  static Lit positive(int var) {
    assert(var >= 1);
    return Lit(2 * var);
  }
  static Lit negative(int var) {
    assert(var >= 1);
    return Lit(2 * var + 1);
  }
  static Lit make(int var, bool negated) {
    return negated ? negative(var) : positive(var);
  }
  static constexpr Lit from_code(int code) { return Lit(code); }

  bool is_const() const { return code_ < 2; }
  bool is_true() const { return code_ == 1; }
  bool is_false() const { return code_ == 0; }
  int var() const {
    assert(!is_const());
    return code_ >> 1;
  }
  bool negated() const {
    assert(!is_const());
    return code_ & 1;
  }
  int code() const { return code_; }

  Lit operator~() const { return Lit(code_ ^ 1); }

  friend auto operator<=>(const Lit&, const Lit&) = default;

  // Signed DIMACS form: +var / -var. Constants have no DIMACS form.
  int to_dimacs() const {
    assert(!is_const());
    return negated() ? -var() : var();
  }

  std::string str() const {
    if (is_false()) return "0";
    if (is_true()) return "1";
    return (negated() ? "~x" : "x") + std::to_string(var());
  }

 private:
  explicit constexpr Lit(int code) : code_(code) {}
  int code_;
};

// Ordered literal sequence (Def.-style): non-constant literals appear in the
// global ordering; constants may repeat and sort before all variables.
using LitSeq = std::vector<Lit>;

inline void sort_canonical(LitSeq& seq) {
  std::sort(seq.begin(), seq.end());
}

inline bool is_canonical(const LitSeq& seq) {
  return std::is_sorted(seq.begin(), seq.end());
}

// Multiset containment: every literal of `part` occurs in `whole` at least
// as often. Both sequences must be canonically sorted.
bool multiset_contains(const LitSeq& whole, const LitSeq& part);

// Multiset difference `whole - part`, assuming containment; canonical order
// is preserved.
LitSeq multiset_subtract(const LitSeq& whole, const LitSeq& part);

}  // namespace pbsn
