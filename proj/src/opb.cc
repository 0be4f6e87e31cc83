#include "pbsn/opb.h"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace pbsn {

namespace {

struct Token {
  std::string text;
  int line;
};

std::vector<Token> tokenize(std::istream& in, int& header_vars,
                            int& header_constraints) {
  std::vector<Token> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '*') {
      // Header comment: * #variable= N #constraint= M
      size_t v = line.find("#variable=");
      size_t c = line.find("#constraint=");
      if (v != std::string::npos)
        header_vars = std::atoi(line.c_str() + v + 10);
      if (c != std::string::npos)
        header_constraints = std::atoi(line.c_str() + c + 12);
      continue;
    }
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      // Split a trailing ';' glued to a token.
      while (!tok.empty() && tok.back() == ';' && tok != ";") {
        tok.pop_back();
        if (!tok.empty()) tokens.push_back({tok, lineno});
        tok = ";";
      }
      tokens.push_back({tok, lineno});
    }
  }
  return tokens;
}

bool is_integer(const std::string& s) {
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + i, s.end(),
                     [](unsigned char ch) { return std::isdigit(ch); });
}

bool is_literal(const std::string& s) {
  size_t i = (s[0] == '~') ? 1 : 0;
  if (i >= s.size() || s[i] != 'x' || i + 1 == s.size()) return false;
  return std::all_of(s.begin() + i + 1, s.end(),
                     [](unsigned char ch) { return std::isdigit(ch); });
}

Lit parse_literal(const Token& t, int& max_var) {
  const std::string& s = t.text;
  bool neg = s[0] == '~';
  std::string idx = s.substr(neg ? 2 : 1);
  long v = std::atol(idx.c_str());
  if (v <= 0) throw OpbParseError(t.line, "variable indices start at 1: " + s);
  max_var = std::max(max_var, int(v));
  return Lit::make(int(v), neg);
}

}  // namespace

PbInstance parse_opb(std::istream& in) {
  int header_vars = 0, header_constraints = 0;
  std::vector<Token> tokens = tokenize(in, header_vars, header_constraints);
  (void)header_constraints;

  PbInstance inst;
  int max_var = 0;
  size_t i = 0;
  auto need = [&](const char* what) -> const Token& {
    if (i >= tokens.size()) {
      int line = tokens.empty() ? 1 : tokens.back().line;
      throw OpbParseError(line, std::string("unexpected end of input, expected ") + what);
    }
    return tokens[i];
  };

  // Parses `<±int> <lit>` terms until a non-term token.
  auto parse_terms = [&](std::vector<PbTerm>& terms) {
    for (;;) {
      if (i >= tokens.size()) return;
      const Token& t = tokens[i];
      if (!is_integer(t.text)) {
        if (is_literal(t.text))
          throw OpbParseError(t.line, "nonlinear term (literal without coefficient): " + t.text);
        return;
      }
      BigInt coeff(t.text);
      ++i;
      const Token& lt = need("a literal");
      if (!is_literal(lt.text))
        throw OpbParseError(lt.line, "expected literal after coefficient, got: " + lt.text);
      terms.push_back({coeff, parse_literal(lt, max_var)});
      ++i;
    }
  };

  while (i < tokens.size()) {
    if (tokens[i].text == "min:") {
      if (inst.objective)
        throw OpbParseError(tokens[i].line, "duplicate objective");
      ++i;
      std::vector<PbTerm> terms;
      parse_terms(terms);
      const Token& t = need("';' after objective");
      if (t.text != ";")
        throw OpbParseError(t.line, "expected ';' after objective, got: " + t.text);
      ++i;
      inst.objective = std::move(terms);
      continue;
    }
    int start_line = tokens[i].line;
    PbConstraint c;
    parse_terms(c.terms);
    if (c.terms.empty())
      throw OpbParseError(tokens[i].line, "expected a constraint term, got: " + tokens[i].text);
    const Token& op = need("a relation operator");
    if (op.text == ">=")
      c.rel = Rel::Ge;
    else if (op.text == "<=")
      c.rel = Rel::Le;
    else if (op.text == "=")
      c.rel = Rel::Eq;
    else if (op.text == ">")
      c.rel = Rel::Gt;
    else if (op.text == "<")
      c.rel = Rel::Lt;
    else
      throw OpbParseError(op.line, "expected relation operator, got: " + op.text);
    ++i;
    const Token& rhs = need("an integer right-hand side");
    if (!is_integer(rhs.text))
      throw OpbParseError(rhs.line, "expected integer right-hand side, got: " + rhs.text);
    c.rhs = BigInt(rhs.text);
    ++i;
    if (i >= tokens.size() || tokens[i].text != ";")
      throw OpbParseError(i < tokens.size() ? tokens[i].line : start_line,
                          "missing ';' terminator");
    ++i;
    inst.constraints.push_back(std::move(c));
  }
  inst.num_vars = std::max(header_vars, max_var);
  return inst;
}

PbInstance parse_opb_string(const std::string& text) {
  std::istringstream in(text);
  return parse_opb(in);
}

namespace {

void write_term(std::ostream& out, const PbTerm& t) {
  assert(!t.lit.is_const());
  if (t.coeff >= 0) out << '+';
  out << t.coeff << ' ' << (t.lit.negated() ? "~x" : "x") << t.lit.var();
}

}  // namespace

void write_opb(std::ostream& out, const PbInstance& instance) {
  out << "* #variable= " << instance.num_vars
      << " #constraint= " << instance.constraints.size() << '\n';
  if (instance.objective) {
    out << "min:";
    for (const auto& t : *instance.objective) {
      out << ' ';
      write_term(out, t);
    }
    out << " ;\n";
  }
  for (const auto& c : instance.constraints) {
    bool first = true;
    for (const auto& t : c.terms) {
      if (!first) out << ' ';
      first = false;
      write_term(out, t);
    }
    const char* op = nullptr;
    switch (c.rel) {
      case Rel::Lt: op = "<"; break;
      case Rel::Le: op = "<="; break;
      case Rel::Eq: op = "="; break;
      case Rel::Ge: op = ">="; break;
      case Rel::Gt: op = ">"; break;
    }
    out << ' ' << op << ' ' << c.rhs << " ;\n";
  }
}

void write_dimacs(std::ostream& out, const ClauseStore& store) {
  out << "p cnf " << store.num_vars() << ' ' << store.clauses().size() << '\n';
  for (const LitSeq& clause : store.clauses()) {
    for (Lit l : clause) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
}

DimacsCnf parse_dimacs(std::istream& in) {
  DimacsCnf cnf;
  std::string tok;
  LitSeq clause;
  bool seen_header = false;
  while (in >> tok) {
    if (tok == "c") {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (tok == "p") {
      std::string fmt;
      long long vars = 0, clauses = 0;
      in >> fmt >> vars >> clauses;
      cnf.num_vars = int(vars);
      seen_header = true;
      continue;
    }
    long long v = std::atoll(tok.c_str());
    if (v == 0) {
      cnf.clauses.push_back(clause);
      clause.clear();
    } else {
      int var = int(v < 0 ? -v : v);
      cnf.num_vars = std::max(cnf.num_vars, var);
      clause.push_back(Lit::make(var, v < 0));
    }
  }
  if (!clause.empty()) cnf.clauses.push_back(clause);
  (void)seen_header;
  return cnf;
}

void print_result(std::ostream& out, ResultStatus status,
                  const BigInt* objective_value, const std::vector<bool>* model,
                  int num_vars) {
  if (objective_value) out << "o " << *objective_value << '\n';
  switch (status) {
    case ResultStatus::OptimumFound: out << "s OPTIMUM FOUND\n"; break;
    case ResultStatus::Satisfiable: out << "s SATISFIABLE\n"; break;
    case ResultStatus::Unsatisfiable: out << "s UNSATISFIABLE\n"; break;
    case ResultStatus::Unknown: out << "s UNKNOWN\n"; break;
  }
  if (model &&
      (status == ResultStatus::OptimumFound || status == ResultStatus::Satisfiable)) {
    out << 'v';
    for (int v = 1; v <= num_vars; ++v)
      out << ' ' << ((v <= int(model->size()) && (*model)[v - 1]) ? "" : "-")
          << 'x' << v;
    out << '\n';
  }
}

}  // namespace pbsn
