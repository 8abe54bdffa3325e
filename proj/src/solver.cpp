#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fpanv/smt.hpp"

namespace fpanv {

namespace {

std::optional<std::string> find_in_path(const std::string& name) {
  const char* path = getenv("PATH");
  if (!path) return std::nullopt;
  std::string p(path);
  size_t pos = 0;
  while (pos <= p.size()) {
    size_t colon = p.find(':', pos);
    std::string dir = p.substr(pos, colon == std::string::npos ? std::string::npos : colon - pos);
    if (!dir.empty()) {
      std::string full = dir + "/" + name;
      if (access(full.c_str(), X_OK) == 0) return full;
    }
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  return std::nullopt;
}

struct RunResult {
  bool timed_out = false;
  bool failed = false;
  int exit_code = 0;
  std::string out;
};

RunResult run_command(const std::string& cmd, double timeout_s) {
  RunResult r;
  int fds[2];
  if (pipe(fds) != 0) {
    r.failed = true;
    return r;
  }
  pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    r.failed = true;
    return r;
  }
  if (pid == 0) {
    setpgid(0, 0);
    dup2(fds[1], STDOUT_FILENO);
    close(fds[0]);
    close(fds[1]);
    execl("/bin/sh", "sh", "-c", cmd.c_str(), nullptr);
    _exit(127);
  }
  close(fds[1]);
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000));
  char buf[65536];
  bool open = true;
  while (open) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                    deadline - std::chrono::steady_clock::now())
                    .count();
    if (left <= 0) {
      r.timed_out = true;
      kill(-pid, SIGKILL);
      break;
    }
    struct pollfd pfd{fds[0], POLLIN, 0};
    int pr = poll(&pfd, 1, static_cast<int>(std::min<long long>(left, 1000)));
    if (pr < 0) break;
    if (pr == 0) continue;
    ssize_t n = read(fds[0], buf, sizeof buf);
    if (n <= 0) open = false;
    else r.out.append(buf, static_cast<size_t>(n));
  }
  close(fds[0]);
  int status = 0;
  waitpid(pid, &status, 0);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string substitute_file(const std::string& tmpl, const std::string& file) {
  std::string out = tmpl;
  std::string key = "{file}";
  auto pos = out.find(key);
  if (pos == std::string::npos)
    throw std::invalid_argument("solver command template lacks {file}: " + tmpl);
  while (pos != std::string::npos) {
    out.replace(pos, key.size(), file);
    pos = out.find(key, pos + file.size());
  }
  return out;
}

// Minimal s-expression token stream for model parsing.
std::vector<std::string> tokenize_sexpr(std::string_view text) {
  std::vector<std::string> toks;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(' || c == ')') {
      toks.emplace_back(1, c);
      ++i;
    } else if (c == ';') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '"') {
      size_t j = i + 1;
      while (j < text.size() && text[j] != '"') ++j;
      toks.push_back(std::string(text.substr(i, j - i + 1)));
      i = j + 1;
    } else {
      size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
             text[j] != '(' && text[j] != ')')
        ++j;
      toks.push_back(std::string(text.substr(i, j - i)));
      i = j;
    }
  }
  return toks;
}

// Extracts (define-fun NAME () Int VALUE) bindings; VALUE is a numeral or
// the (- numeral) form.
std::map<std::string, long long> parse_model_values(std::string_view text) {
  std::map<std::string, long long> model;
  auto toks = tokenize_sexpr(text);
  for (size_t i = 0; i + 1 < toks.size(); ++i) {
    if (toks[i] != "define-fun") continue;
    std::string name = toks[i + 1];
    size_t j = i + 2;
    if (j + 1 >= toks.size() || toks[j] != "(" || toks[j + 1] != ")") continue;
    j += 2;
    if (j >= toks.size() || toks[j] != "Int") continue;
    ++j;
    if (j >= toks.size()) continue;
    long long sign = 1;
    if (toks[j] == "(") {
      if (j + 2 >= toks.size() || toks[j + 1] != "-") continue;
      sign = -1;
      j += 2;
    }
    try {
      model[name] = sign * std::stoll(toks[j]);
    } catch (...) {
      // non-integer binding; ignore
    }
  }
  return model;
}

}  // namespace

std::optional<std::string> try_default_solver_command() {
  if (const char* env = getenv("FPANV_SOLVER"); env && *env) return std::string(env);
  if (auto z3 = find_in_path("z3")) return *z3 + " {file}";
  if (auto cvc5 = find_in_path("cvc5")) return *cvc5 + " --produce-models {file}";
  if (auto node = find_in_path("node")) {
    std::string shim;
    if (const char* env = getenv("FPANV_Z3_SHIM"); env && *env) shim = env;
#ifdef FPANV_SOLVER_SHIM
    if (shim.empty() && access(FPANV_SOLVER_SHIM, R_OK) == 0) shim = FPANV_SOLVER_SHIM;
#endif
    if (shim.empty() && access("tools/z3smt2.js", R_OK) == 0) shim = "tools/z3smt2.js";
    if (!shim.empty()) return *node + " " + shim + " {file}";
  }
  return std::nullopt;
}

std::string default_solver_command() {
  auto cmd = try_default_solver_command();
  if (!cmd)
    throw std::runtime_error(
        "no SMT solver found: set FPANV_SOLVER (a command template with {file}), or put z3 or "
        "cvc5 on PATH, or install the z3-solver npm package and point FPANV_Z3_SHIM at the "
        "z3smt2.js shim");
  return *cmd;
}

SolverResult solve(const SmtProblem& prob, const std::string& solver_cmd, double timeout_s) {
  SolverResult res;
  auto t0 = std::chrono::steady_clock::now();

  namespace fs = std::filesystem;
  fs::path file;
  {
    std::string tmpl = (fs::temp_directory_path() / "fpanv-XXXXXX.smt2").string();
    int fd = mkstemps(tmpl.data(), 5);
    if (fd < 0) {
      res.detail = "cannot create temp file";
      return res;
    }
    close(fd);
    file = tmpl;
    std::ofstream os(file);
    os << emit_smtlib(prob);
  }

  RunResult run = run_command(substitute_file(solver_cmd, file.string()), timeout_s);
  std::error_code ec;
  fs::remove(file, ec);
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (run.timed_out) {
    res.verdict = SolverResult::Verdict::Timeout;
    res.detail = "solver exceeded " + std::to_string(timeout_s) + " s";
    return res;
  }
  if (run.failed) {
    res.detail = "failed to launch solver";
    return res;
  }

  std::istringstream is(run.out);
  std::string verdict_line;
  while (std::getline(is, verdict_line)) {
    while (!verdict_line.empty() &&
           std::isspace(static_cast<unsigned char>(verdict_line.back())))
      verdict_line.pop_back();
    size_t b = 0;
    while (b < verdict_line.size() && std::isspace(static_cast<unsigned char>(verdict_line[b])))
      ++b;
    verdict_line = verdict_line.substr(b);
    if (!verdict_line.empty() && verdict_line[0] != ';') break;
  }
  res.detail = verdict_line;
  if (verdict_line == "unsat") {
    res.verdict = SolverResult::Verdict::Unsat;
    return res;
  }
  if (verdict_line == "unknown") {
    res.verdict = SolverResult::Verdict::Unknown;
    return res;
  }
  if (verdict_line != "sat") {
    res.verdict = SolverResult::Verdict::Error;
    res.detail = "unparsable solver output: " +
                 (run.out.size() > 400 ? run.out.substr(0, 400) + "..." : run.out);
    return res;
  }

  std::string rest = run.out.substr(run.out.find("sat") + 3);
  auto values = parse_model_values(rest);
  std::map<int, AbstractVal> model;
  for (int seg = 0; seg < prob.segs.count(); ++seg) {
    auto get = [&](Field f) -> std::optional<long long> {
      auto it = values.find(prob.var_name(seg, f));
      if (it == values.end()) return std::nullopt;
      return it->second;
    };
    auto s = get(Field::Sign);
    auto e = get(Field::Exp);
    auto nlz = get(Field::Nlz), nlo = get(Field::Nlo), ntz = get(Field::Ntz),
         nto = get(Field::Nto);
    bool complete = s && e;
    if (prob.domain != Domain::SE) complete = complete && ntz;
    if (prob.domain == Domain::SELTZO) complete = complete && nlz && nlo && nto;
    if (!complete) {
      res.verdict = SolverResult::Verdict::Error;
      res.detail = "model misses variables for segment " + prob.segs.label(prob.net, seg);
      return res;
    }
    switch (prob.domain) {
      case Domain::SE:
        model.emplace(seg, AbstractVal::se(static_cast<int>(*s), *e));
        break;
      case Domain::SETZ:
        model.emplace(seg, AbstractVal::setz(static_cast<int>(*s), *e, static_cast<int>(*ntz)));
        break;
      case Domain::SELTZO:
        model.emplace(seg, AbstractVal::seltzo(static_cast<int>(*s), *e, static_cast<int>(*nlz),
                                               static_cast<int>(*nlo), static_cast<int>(*ntz),
                                               static_cast<int>(*nto)));
        break;
    }
  }
  std::string why;
  if (!validate_model(prob, model, &why)) {
    res.verdict = SolverResult::Verdict::Error;
    res.detail = "model failed independent re-validation: " + why;
    return res;
  }
  res.verdict = SolverResult::Verdict::Sat;
  res.model = std::move(model);
  return res;
}

MaxKResult max_provable_k(const Fpan& net, Domain domain, const FormatParams& fmt,
                          long long k_lo, long long k_hi, const std::string& solver_cmd,
                          double timeout_s, const EncodeOptions& opt) {
  MaxKResult out;
  auto probe = [&](long long k) -> std::optional<bool> {
    SmtProblem pb = encode(net, domain, PropertySpec::relerr(k), fmt, opt);
    SolverResult r = solve(pb, solver_cmd, timeout_s);
    out.probes.push_back({k, r.verdict, r.wall_seconds});
    if (r.verdict == SolverResult::Verdict::Unsat) return true;
    if (r.verdict == SolverResult::Verdict::Sat) return false;
    return std::nullopt;
  };

  auto lo_res = probe(k_lo);
  if (!lo_res) {
    out.inconclusive = true;
    return out;
  }
  if (!*lo_res) return out;  // sat already at the weakest bound: nothing provable

  long long lo = k_lo, hi = k_hi;
  if (hi > lo) {
    auto hi_res = probe(hi);
    if (!hi_res) {
      out.inconclusive = true;
      return out;
    }
    if (*hi_res) {
      out.k = hi;
      return out;
    }
    --hi;
  }
  while (lo < hi) {
    long long mid = lo + (hi - lo + 1) / 2;
    auto r = probe(mid);
    if (!r) {
      out.inconclusive = true;
      return out;
    }
    if (*r) lo = mid;
    else hi = mid - 1;
  }
  out.k = lo;
  return out;
}

}  // namespace fpanv
