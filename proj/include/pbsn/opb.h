#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "pbsn/clause_store.h"
#include "pbsn/pb.h"

namespace pbsn {

class OpbParseError : public std::runtime_error {
 public:
  OpbParseError(int line, std::string message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line(line),
        message(std::move(message)) {}
  int line;
  std::string message;
};

// Parses the linear OPB subset: `*` comments, an optional
// `* #variable= N #constraint= M` header, an optional `min:` objective, and
// constraint lines `<±int> x<idx> ... <op> <int> ;` with `~x<idx>` for
// negated literals. Products are rejected. Throws OpbParseError.
PbInstance parse_opb(std::istream& in);
PbInstance parse_opb_string(const std::string& text);

void write_opb(std::ostream& out, const PbInstance& instance);

// `p cnf <vars> <clauses>` and one zero-terminated clause per line, in
// insertion order.
void write_dimacs(std::ostream& out, const ClauseStore& store);

struct DimacsCnf {
  int num_vars = 0;
  std::vector<LitSeq> clauses;
};
DimacsCnf parse_dimacs(std::istream& in);

enum class ResultStatus { OptimumFound, Satisfiable, Unsatisfiable, Unknown };

// Competition-style tail of the output: optional final `o` line, the `s`
// line, and a `v` line over x1..x<num_vars> when a model exists.
void print_result(std::ostream& out, ResultStatus status,
                  const BigInt* objective_value, const std::vector<bool>* model,
                  int num_vars);

}  // namespace pbsn
