#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pbsn/encoder.h"
#include "pbsn/opb.h"
#include "pbsn/optimize.h"
#include "pbsn/solver.h"

namespace fs = std::filesystem;
using namespace pbsn;

namespace {

struct CommonFlags {
  bool reuse = true;
  bool no_skip = false;
  int block_size = 5;
  int max_base_prime = 17;
  std::string solver;
  double timeout = 0;
  std::string emit_cnf;
  bool stats = false;

  EncodeOptions encode_options() const {
    EncodeOptions opts;
    opts.reuse = reuse;
    opts.skip = !no_skip;
    opts.block_size = block_size;
    opts.max_base_prime = max_base_prime;
    return opts;
  }

  std::string solver_path() const {
    if (!solver.empty()) return solver;
    const char* env = std::getenv("PBSN_SOLVER");
    return env ? env : "";
  }
};

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_flag("--reuse,!--no-reuse", f.reuse, "reuse previously encoded sorters (default on)");
  cmd->add_flag("--no-skip", f.no_skip, "disable the multi-way merge skip rule");
  cmd->add_option("--block-size", f.block_size, "direct-selector block size")->default_val(5);
  cmd->add_option("--max-base-prime", f.max_base_prime, "largest radix prime")->default_val(17);
  cmd->add_option("--solver", f.solver, "external SAT solver (argv: solver dimacs-file)");
  cmd->add_option("--timeout", f.timeout, "wall-clock budget in seconds");
  cmd->add_option("--emit-cnf", f.emit_cnf, "write the encoding as DIMACS CNF");
  cmd->add_flag("--stats", f.stats, "print encoding statistics");
}

PbInstance parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw OpbParseError(1, "cannot open file: " + path);
  return parse_opb(in);
}

void print_stats(std::ostream& out, const Stats& s, int num_vars,
                 size_t num_clauses) {
  out << "c vars=" << num_vars << " clauses=" << num_clauses << '\n'
      << "c aux_vars=" << s.vars_created << " sorters_built=" << s.sorters_built
      << " sorters_reused=" << s.sorters_reused
      << " reuse_covered_inputs=" << s.reuse_covered_inputs << '\n';
}

int cmd_solve(const std::string& path, const CommonFlags& flags) {
  PbInstance inst = parse_file(path);

  OptimizeOptions opts;
  opts.encode = flags.encode_options();
  opts.external_solver = flags.solver_path();
  opts.timeout_seconds = flags.timeout;

  OptimizeResult res = optimize(inst, opts, [](const BigInt& v) {
    std::cout << "o " << v << std::endl;
  });

  if (!flags.emit_cnf.empty()) {
    // Re-encode the hard constraints alone for the requested CNF dump.
    ClauseStore store;
    SorterRegistry registry;
    encode_instance(store, registry, inst, opts.encode);
    std::ofstream out(flags.emit_cnf);
    write_dimacs(out, store);
  }

  ResultStatus status;
  if (res.status == SolveStatus::Unsat)
    status = ResultStatus::Unsatisfiable;
  else if (res.status == SolveStatus::Unknown)
    status = ResultStatus::Unknown;
  else if (inst.objective && res.optimum_proved)
    status = ResultStatus::OptimumFound;
  else
    status = ResultStatus::Satisfiable;

  print_result(std::cout, status, nullptr,
               res.best_model.empty() ? nullptr : &res.best_model,
               inst.num_vars);
  if (flags.stats)
    print_stats(std::cout, res.stats, 0, size_t(res.stats.clauses_added));
  return res.status == SolveStatus::Unknown ? 2 : 0;
}

int cmd_encode(const std::string& path, const CommonFlags& flags) {
  PbInstance inst = parse_file(path);
  ClauseStore store;
  SorterRegistry registry;
  EncodeReport report = encode_instance(store, registry, inst,
                                        flags.encode_options());
  if (!flags.emit_cnf.empty()) {
    std::ofstream out(flags.emit_cnf);
    write_dimacs(out, store);
  }
  print_stats(std::cout, report.stats, store.num_vars(),
              store.clauses().size());
  if (report.unsat) std::cout << "c unsat_at_encode=1\n";
  return 0;
}

int cmd_bench(const std::string& dir, const CommonFlags& flags,
              const std::string& out_path) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".opb")
      files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file_out.open(out_path);
    out = &file_out;
  }
  *out << "instance,vars_on,vars_off,clauses_on,clauses_off,sorters_reused,result,time\n";

  bool mismatch = false;
  for (const fs::path& f : files) {
    auto t0 = std::chrono::steady_clock::now();
    PbInstance inst = parse_file(f.string());

    auto encode_with = [&](bool reuse, Stats& stats, int& vars, size_t& cls) {
      ClauseStore store;
      SorterRegistry registry;
      EncodeOptions opts = flags.encode_options();
      opts.reuse = reuse;
      encode_instance(store, registry, inst, opts);
      stats = store.snapshot_stats();
      vars = store.num_vars();
      cls = store.clauses().size();
    };
    Stats stats_on, stats_off;
    int vars_on = 0, vars_off = 0;
    size_t clauses_on = 0, clauses_off = 0;
    encode_with(true, stats_on, vars_on, clauses_on);
    encode_with(false, stats_off, vars_off, clauses_off);

    auto solve_mode = [&](bool reuse) {
      OptimizeOptions opts;
      opts.encode = flags.encode_options();
      opts.encode.reuse = reuse;
      opts.external_solver = flags.solver_path();
      opts.timeout_seconds = flags.timeout;
      return optimize(inst, opts);
    };
    OptimizeResult on = solve_mode(true);
    OptimizeResult off = solve_mode(false);

    std::string result;
    if (on.status != off.status || on.best_value != off.best_value) {
      result = "MISMATCH";
      mismatch = true;
    } else if (on.status == SolveStatus::Unsat) {
      result = "UNSAT";
    } else if (on.status == SolveStatus::Unknown) {
      result = "UNKNOWN";
    } else if (on.best_value) {
      std::ostringstream v;
      v << "OPT:" << *on.best_value;
      result = v.str();
    } else {
      result = "SAT";
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0).count();
    char timebuf[32];
    std::snprintf(timebuf, sizeof timebuf, "%.3f", secs);
    *out << f.filename().string() << ',' << vars_on << ',' << vars_off << ','
         << clauses_on << ',' << clauses_off << ','
         << stats_on.sorters_reused << ',' << result << ',' << timebuf
         << '\n';
  }
  return mismatch ? 2 : 0;
}

int cmd_sat(const std::string& path, const CommonFlags& flags) {
  std::ifstream in(path);
  if (!in) {
    std::cout << "s UNKNOWN\n";
    return 2;
  }
  DimacsCnf cnf = parse_dimacs(in);
  ClauseStore store;
  store.ensure_vars(cnf.num_vars);
  for (const LitSeq& cl : cnf.clauses) store.add_clause(cl);

  SolveBudget budget;
  budget.seconds = flags.timeout;
  SolveOutcome res = solve(store, budget);
  if (res.status == SolveStatus::Unsat) {
    std::cout << "s UNSATISFIABLE\n";
  } else if (res.status == SolveStatus::Sat) {
    std::cout << "s SATISFIABLE\nv";
    for (int v = 1; v <= store.num_vars(); ++v)
      std::cout << ' ' << (res.model[size_t(v) - 1] ? v : -v);
    std::cout << " 0\n";
  } else {
    std::cout << "s UNKNOWN\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudo-Boolean to CNF encoder and optimizing solver"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string input, bench_out;

  CLI::App* solve_cmd = app.add_subcommand("solve", "optimize or decide an OPB instance");
  solve_cmd->add_option("file", input, "OPB instance")->required();
  add_common_flags(solve_cmd, flags);

  CLI::App* encode_cmd = app.add_subcommand("encode", "encode an OPB instance to CNF");
  encode_cmd->add_option("file", input, "OPB instance")->required();
  add_common_flags(encode_cmd, flags);

  CLI::App* bench_cmd = app.add_subcommand("bench", "encode + solve every .opb twice (reuse on/off), CSV report");
  bench_cmd->add_option("dir", input, "directory of .opb files")->required();
  bench_cmd->add_option("--out", bench_out, "CSV output path (default stdout)");
  add_common_flags(bench_cmd, flags);

  CLI::App* sat_cmd = app.add_subcommand("sat", "solve a DIMACS CNF file, print s/v lines");
  sat_cmd->add_option("file", input, "DIMACS CNF file")->required();
  sat_cmd->add_option("--timeout", flags.timeout, "budget in seconds");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return cmd_solve(input, flags);
    if (encode_cmd->parsed()) return cmd_encode(input, flags);
    if (bench_cmd->parsed()) return cmd_bench(input, flags, bench_out);
    if (sat_cmd->parsed()) return cmd_sat(input, flags);
  } catch (const OpbParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
