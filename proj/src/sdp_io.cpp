#include "quadcode/sdp_io.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstring>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace quadcode {

namespace {

// Exact decimal rendering of value / 2^e (dyadic rationals have finite
// decimal expansions: multiply by 5^e and shift the point).
std::string render_dyadic(const BigInt& value, int e) {
  if (value == 0) return "0";
  if (e == 0) return value.str();
  BigInt scaled = boost::multiprecision::abs(value);
  for (int i = 0; i < e; ++i) scaled *= 5;
  std::string digits = scaled.str();
  if (static_cast<int>(digits.size()) <= e) digits.insert(0, static_cast<size_t>(e + 1) - digits.size(), '0');
  digits.insert(digits.size() - static_cast<size_t>(e), ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return (value < 0 ? "-" : "") + digits;
}

struct EntryLine {
  int mat, block, i, j;
  std::string value;
};

bool entry_less(const EntryLine& a, const EntryLine& b) {
  return std::tie(a.mat, a.block, a.i, a.j) < std::tie(b.mat, b.block, b.i, b.j);
}

// Diagonal power-of-two exponents bringing every scaled entry at or below the
// cap; identity when nothing exceeds it.
std::vector<int> row_scale_exponents(const Block& block, const BigInt& cap) {
  std::vector<int> e(static_cast<size_t>(block.size), 0);
  auto exceeds = [&](const BigInt& v, int r, int c) {
    BigInt bound = cap << (e[static_cast<size_t>(r)] + e[static_cast<size_t>(c)]);
    return boost::multiprecision::abs(v) > bound;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (int r = 0; r < block.size && !changed; ++r)
      for (int c = r; c < block.size && !changed; ++c) {
        const LinearEntry& entry = block.at(r, c);
        BigInt worst = boost::multiprecision::abs(entry.constant);
        for (const auto& [var, coeff] : entry.coeff)
          worst = std::max(worst, boost::multiprecision::abs(coeff));
        if (exceeds(worst, r, c)) {
          ++e[static_cast<size_t>(r == c ? r : (e[static_cast<size_t>(r)] <= e[static_cast<size_t>(c)] ? r : c))];
          changed = true;
        }
      }
  }
  return e;
}

}  // namespace

Json write_sdpa(const SdpProblem& problem, std::ostream& out, const WriteOptions& opts) {
  const int nvars = static_cast<int>(problem.vars.size());
  const int nblocks = static_cast<int>(problem.blocks.size()) + 1;  // + nonnegativity block
  BigInt cap(static_cast<long long>(opts.magnitude_cap));

  std::vector<std::vector<int>> scales;
  for (const Block& b : problem.blocks) scales.push_back(row_scale_exponents(b, cap));

  std::vector<EntryLine> lines;
  for (size_t bi = 0; bi < problem.blocks.size(); ++bi) {
    const Block& block = problem.blocks[bi];
    const std::vector<int>& e = scales[bi];
    for (int r = 0; r < block.size; ++r)
      for (int c = r; c < block.size; ++c) {
        const LinearEntry& entry = block.at(r, c);
        int shift = e[static_cast<size_t>(r)] + e[static_cast<size_t>(c)];
        if (entry.constant != 0)  // F0 = -C0
          lines.push_back({0, static_cast<int>(bi) + 1, r + 1, c + 1,
                           render_dyadic(-entry.constant, shift)});
        for (const auto& [var, coeff] : entry.coeff)
          lines.push_back({var + 1, static_cast<int>(bi) + 1, r + 1, c + 1,
                           render_dyadic(coeff, shift)});
      }
  }
  for (int v = 0; v < nvars; ++v) lines.push_back({v + 1, nblocks, v + 1, v + 1, "1"});
  std::sort(lines.begin(), lines.end(), entry_less);

  out << "\"quadcode q=" << problem.q << " n=" << problem.n << " d=" << problem.d << "\n";
  out << nvars << "\n" << nblocks << "\n";
  for (const Block& b : problem.blocks) out << b.size << " ";
  out << -nvars << "\n";
  for (int v = 0; v < nvars; ++v) {
    if (v) out << " ";
    out << (v == problem.objective_var ? (-problem.objective_coeff).str() : "0");
  }
  out << "\n";
  for (const EntryLine& l : lines)
    out << l.mat << " " << l.block << " " << l.i << " " << l.j << " " << l.value << "\n";

  Json manifest;
  manifest["tool"] = "quadcode";
  manifest["format"] = "sdpa-sparse";
  manifest["parameters"] = Json{{"q", problem.q}, {"n", problem.n}, {"d", problem.d}};
  manifest["conventions"] = Json{
      {"sense_in_file", "min"},
      {"objective_negated", true},
      {"constant_matrix", "F0 = -C0, so sum_i y_i F_i - F0 reproduces the affine block"},
      {"nonnegativity", "one trailing diagonal block of size #variables"},
      {"empty_set_row",
       "(0,0) fixed to 1; (0,t) entries are ordered-pair sums C(n,t) q^n (q-1)^t on the "
       "distance-t pair orbit"},
  };
  manifest["statistics"] = Json{{"variables", nvars},
                                {"sdp_blocks", static_cast<int>(problem.blocks.size())},
                                {"max_block_size", problem.max_block_size()},
                                {"entry_lines", static_cast<int>(lines.size())}};
  manifest["objective"] = Json{{"variable", problem.objective_var + 1},
                               {"coefficient", problem.objective_coeff.str()}};
  Json vars = Json::array();
  for (size_t v = 0; v < problem.vars.size(); ++v) {
    Json j;
    j["index"] = static_cast<int>(v) + 1;
    j["orbit"] = problem.vars[v].orbit_id;
    j["cardinality"] = problem.vars[v].cardinality;
    if (problem.vars[v].min_distance >= 0)
      j["min_distance"] = problem.vars[v].min_distance;
    else
      j["min_distance"] = nullptr;
    vars.push_back(std::move(j));
  }
  manifest["variables"] = std::move(vars);
  Json blocks = Json::array();
  for (size_t bi = 0; bi < problem.blocks.size(); ++bi) {
    const Block& b = problem.blocks[bi];
    Json j;
    j["index"] = static_cast<int>(bi) + 1;
    j["label"] = b.label;
    j["size"] = b.size;
    j["augmented"] = b.augmented;
    j["gcd"] = b.divided_gcd.str();
    bool scaled = std::any_of(scales[bi].begin(), scales[bi].end(), [](int x) { return x != 0; });
    if (scaled) j["row_scale_pow2"] = scales[bi];
    blocks.push_back(std::move(j));
  }
  manifest["blocks"] = std::move(blocks);
  return manifest;
}

Json write_sdpa_file(const SdpProblem& problem, const std::string& path,
                     const WriteOptions& opts) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_sdpa_file: cannot open " + path);
  return write_sdpa(problem, out, opts);
}

namespace {

std::string canonical_number(const std::string& s) {
  std::string t = s;
  bool neg = false;
  size_t pos = 0;
  if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) neg = t[pos++] == '-';
  std::string digits = t.substr(pos);
  std::string intpart = digits, frac;
  if (auto dot = digits.find('.'); dot != std::string::npos) {
    intpart = digits.substr(0, dot);
    frac = digits.substr(dot + 1);
  }
  while (intpart.size() > 1 && intpart.front() == '0') intpart.erase(intpart.begin());
  if (intpart.empty()) intpart = "0";
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = intpart;
  if (!frac.empty()) out += "." + frac;
  if (out == "0") return out;
  return (neg ? "-" : "") + out;
}

}  // namespace

ParsedSdpa parse_sdpa(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && (line[0] == '"' || line[0] == '*')) continue;
    for (char& ch : line)
      if (ch == '{' || ch == '}' || ch == '(' || ch == ')' || ch == ',') ch = ' ';
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  size_t pos = 0;
  auto next = [&]() -> const std::string& {
    if (pos >= tokens.size()) throw std::runtime_error("parse_sdpa: truncated file");
    return tokens[pos++];
  };
  ParsedSdpa f;
  f.nvars = std::stoi(next());
  int nblocks = std::stoi(next());
  for (int b = 0; b < nblocks; ++b) f.block_sizes.push_back(std::stoi(next()));
  for (int v = 0; v < f.nvars; ++v) f.objective.push_back(canonical_number(next()));
  while (tokens.size() - pos >= 5) {
    ParsedSdpa::Entry e;
    e.mat = std::stoi(next());
    e.block = std::stoi(next());
    e.i = std::stoi(next());
    e.j = std::stoi(next());
    e.value = canonical_number(next());
    f.entries.push_back(std::move(e));
  }
  return f;
}

std::string render_sdpa(const ParsedSdpa& f) {
  std::ostringstream out;
  out << f.nvars << "\n" << f.block_sizes.size() << "\n";
  for (int s : f.block_sizes) out << s << " ";
  out << "\n";
  for (size_t v = 0; v < f.objective.size(); ++v) out << (v ? " " : "") << f.objective[v];
  out << "\n";
  for (const auto& e : f.entries)
    out << e.mat << " " << e.block << " " << e.i << " " << e.j << " " << e.value << "\n";
  return out.str();
}

SolverRun run_solver(const std::string& problem_file, const SolverConfig& config) {
  SolverRun run;
  if (config.tolerance <= 0) throw std::invalid_argument("run_solver: tolerance must be positive");
  if (config.solver_path.empty()) {
    run.status = SolverRun::Status::not_found;
    run.output = "no solver configured (set --solver or " + std::string(kSolverEnvVar) + ")";
    return run;
  }
  if (config.solver_path.find('/') != std::string::npos &&
      access(config.solver_path.c_str(), X_OK) != 0) {
    run.status = SolverRun::Status::not_found;
    run.output = "solver not found or not executable: " + config.solver_path;
    return run;
  }

  int fds[2];
  if (pipe(fds) != 0) throw std::runtime_error("run_solver: pipe failed");
  auto start = std::chrono::steady_clock::now();
  pid_t pid = fork();
  if (pid < 0) throw std::runtime_error("run_solver: fork failed");
  if (pid == 0) {
    dup2(fds[1], STDOUT_FILENO);
    dup2(fds[1], STDERR_FILENO);
    close(fds[0]);
    close(fds[1]);
    std::vector<std::string> args{config.solver_path};
    args.insert(args.end(), config.extra_args.begin(), config.extra_args.end());
    args.push_back(problem_file);
    std::vector<char*> argv;
    for (std::string& a : args) argv.push_back(a.data());
    argv.push_back(nullptr);
    execvp(argv[0], argv.data());
    _exit(127);
  }
  close(fds[1]);
  fcntl(fds[0], F_SETFL, O_NONBLOCK);

  bool timed_out = false;
  char buf[4096];
  while (true) {
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double left = config.time_limit_s - elapsed;
    if (left <= 0) {
      timed_out = true;
      kill(pid, SIGKILL);
    }
    pollfd pfd{fds[0], POLLIN, 0};
    int pr = poll(&pfd, 1, timed_out ? 100 : static_cast<int>(std::min(left, 0.25) * 1000) + 1);
    if (pr > 0) {
      ssize_t got = read(fds[0], buf, sizeof buf);
      if (got > 0) {
        run.output.append(buf, static_cast<size_t>(got));
        continue;
      }
      if (got == 0) break;  // EOF
      if (errno != EAGAIN && errno != EINTR) break;
    }
    if (timed_out) {
      // Drain whatever is left after the kill.
      ssize_t got;
      while ((got = read(fds[0], buf, sizeof buf)) > 0)
        run.output.append(buf, static_cast<size_t>(got));
      break;
    }
  }
  close(fds[0]);
  int wstatus = 0;
  waitpid(pid, &wstatus, 0);
  run.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (timed_out) {
    run.status = SolverRun::Status::timeout;
    run.exit_code = -1;
  } else if (WIFEXITED(wstatus) && WEXITSTATUS(wstatus) == 127) {
    run.status = SolverRun::Status::not_found;
    run.exit_code = 127;
    if (run.output.empty()) run.output = "solver not found: " + config.solver_path;
  } else if (!WIFEXITED(wstatus) || WEXITSTATUS(wstatus) != 0) {
    run.status = SolverRun::Status::nonzero_exit;
    run.exit_code = WIFEXITED(wstatus) ? WEXITSTATUS(wstatus) : -WTERMSIG(wstatus);
  }
  return run;
}

namespace {

std::optional<double> find_value(const std::string& text, const std::regex& re) {
  std::smatch m;
  if (std::regex_search(text, m, re)) return std::stod(m[1].str());
  return std::nullopt;
}

}  // namespace

BoundReport bound_report(const SolverRun& run, const SdpProblem& problem,
                         const SolverConfig& config) {
  static const std::regex primal_re(
      R"((?:objValPrimal\s*=|Primal objective value:)\s*([-+]?[0-9][0-9.eE+-]*))");
  static const std::regex dual_re(
      R"((?:objValDual\s*=|Dual objective value:)\s*([-+]?[0-9][0-9.eE+-]*))");
  static const std::regex status_re(R"(phase\.value\s*=\s*(\S+))");

  std::optional<double> primal_min = find_value(run.output, primal_re);
  std::optional<double> dual_min = find_value(run.output, dual_re);
  if (!primal_min && !dual_min)
    throw SolverOutputError("bound_report: no objective values in solver output", run.output);

  BoundReport rep;
  rep.q = problem.q;
  rep.n = problem.n;
  rep.d = problem.d;
  std::smatch m;
  if (std::regex_search(run.output, m, status_re))
    rep.solver_status = m[1].str();
  else if (run.output.find("SDP solved") != std::string::npos)
    rep.solver_status = "pdOPT";
  else
    rep.solver_status = run.status == SolverRun::Status::ok ? "unknown" : "failed";

  // The file encodes the maximization negated, so flip signs back.
  rep.primal = primal_min ? -*primal_min : 0.0;
  rep.have_dual = dual_min.has_value();
  rep.dual = dual_min ? -*dual_min : 0.0;
  if (primal_min && dual_min) {
    rep.gap = std::abs(*primal_min - *dual_min);
    rep.objective = rep.dual;  // the dual side upper-bounds the maximum
  } else if (dual_min) {
    rep.objective = rep.dual;
  } else {
    rep.objective = rep.primal;
  }
  rep.bound = static_cast<long long>(std::floor(rep.objective + config.tolerance));
  bool solved = rep.solver_status == "pdOPT" || rep.solver_status == "Solved" ||
                rep.solver_status == "AlmostSolved" || rep.solver_status == "unknown";
  rep.trusted = run.status == SolverRun::Status::ok && solved && rep.have_dual &&
                primal_min.has_value() && rep.gap <= config.tolerance;
  rep.wall_s = run.wall_s;
  rep.variables = static_cast<int>(problem.vars.size());
  rep.blocks = static_cast<int>(problem.blocks.size());
  rep.max_block = problem.max_block_size();
  rep.caveat =
      "upper bound on A_q(n,d): floor(solver objective + tolerance); relies on the numerical "
      "solver, no exact rational certificate";
  return rep;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["parameters"] = Json{{"q", r.q}, {"n", r.n}, {"d", r.d}};
  j["bound"] = r.bound;
  j["objective"] = r.objective;
  j["primal"] = r.primal;
  if (r.have_dual) j["dual"] = r.dual;
  j["gap"] = r.gap;
  j["solver_status"] = r.solver_status;
  j["trusted"] = r.trusted;
  j["wall_seconds"] = r.wall_s;
  j["statistics"] =
      Json{{"variables", r.variables}, {"blocks", r.blocks}, {"max_block_size", r.max_block}};
  j["caveat"] = r.caveat;
  return j;
}

}  // namespace quadcode
