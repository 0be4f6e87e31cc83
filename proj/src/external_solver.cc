#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "pbsn/opb.h"
#include "pbsn/solver.h"

namespace pbsn {

namespace {

SolveOutcome fail(const std::string& why) {
  SolveOutcome out;
  out.status = SolveStatus::Unknown;
  out.diagnostic = why;
  return out;
}

// Runs argv = [path, arg], captures stdout, kills the child once the
// deadline passes. Returns nullopt on timeout or spawn failure.
std::optional<std::string> run_child(const std::string& path,
                                     const std::string& arg,
                                     double timeout_seconds,
                                     std::string& error) {
  int fds[2];
  if (pipe(fds) != 0) {
    error = "pipe() failed";
    return std::nullopt;
  }
  pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    error = "fork() failed";
    return std::nullopt;
  }
  if (pid == 0) {
    dup2(fds[1], STDOUT_FILENO);
    close(fds[0]);
    close(fds[1]);
    execlp(path.c_str(), path.c_str(), arg.c_str(), (char*)nullptr);
    _exit(127);
  }
  close(fds[1]);

  std::string output;
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration<double>(
                      timeout_seconds > 0 ? timeout_seconds : 1e9);
  char buf[4096];
  bool timed_out = false;
  for (;;) {
    auto remain = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (remain.count() <= 0) {
      timed_out = true;
      break;
    }
    struct pollfd pfd = {fds[0], POLLIN, 0};
    int pr = poll(&pfd, 1, int(std::min<long long>(remain.count(), 1000)));
    if (pr < 0) break;
    if (pr == 0) continue;
    ssize_t n = read(fds[0], buf, sizeof(buf));
    if (n <= 0) break;  // EOF
    output.append(buf, size_t(n));
  }
  close(fds[0]);
  if (timed_out) {
    kill(pid, SIGKILL);
    waitpid(pid, nullptr, 0);
    error = "external solver timed out";
    return std::nullopt;
  }
  int status = 0;
  waitpid(pid, &status, 0);
  if (WIFEXITED(status) && WEXITSTATUS(status) == 127) {
    error = "could not execute external solver: " + path;
    return std::nullopt;
  }
  return output;
}

}  // namespace

SolveOutcome solve_external(const ClauseStore& store,
                            const std::string& solver_path,
                            double timeout_seconds) {
  char tmpl[] = "/tmp/pbsn-XXXXXX";
  int fd = mkstemp(tmpl);
  if (fd < 0) return fail("mkstemp failed");
  close(fd);
  std::string dimacs_path = tmpl;
  {
    std::ofstream out(dimacs_path);
    write_dimacs(out, store);
    if (!out) {
      unlink(tmpl);
      return fail("failed to write DIMACS file");
    }
  }
  std::string error;
  std::optional<std::string> output =
      run_child(solver_path, dimacs_path, timeout_seconds, error);
  unlink(tmpl);
  if (!output) return fail(error);

  SolveOutcome out;
  out.model.assign(size_t(store.num_vars()), false);
  bool has_status = false;
  std::istringstream lines(*output);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("s ", 0) == 0) {
      has_status = true;
      if (line.find("UNSATISFIABLE") != std::string::npos)
        out.status = SolveStatus::Unsat;
      else if (line.find("SATISFIABLE") != std::string::npos ||
               line.find("OPTIMUM") != std::string::npos)
        out.status = SolveStatus::Sat;
      else
        out.status = SolveStatus::Unknown;
    } else if (line.rfind("v", 0) == 0 && (line.size() == 1 || line[1] == ' ')) {
      std::istringstream toks(line.substr(1));
      std::string tok;
      while (toks >> tok) {
        // DIMACS ints or PB-style x / -x / ~x tokens.
        bool neg = false;
        size_t i = 0;
        if (tok[i] == '-' || tok[i] == '~') {
          neg = true;
          ++i;
        }
        if (i < tok.size() && tok[i] == 'x') ++i;
        long v = std::atol(tok.c_str() + i);
        if (v > 0 && v <= long(out.model.size())) out.model[size_t(v) - 1] = !neg;
      }
    }
  }
  if (!has_status) return fail("external solver printed no s-line");
  if (out.status != SolveStatus::Sat) out.model.clear();
  return out;
}

}  // namespace pbsn
