#include "qn/solver.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace qn {

namespace fs = std::filesystem;
using nlohmann::json;

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::sat: return "sat";
    case Verdict::unsat: return "unsat";
    case Verdict::timeout: return "timeout";
    case Verdict::unknown: return "unknown";
    case Verdict::error: return "error";
  }
  return "?";
}

SolverSpec default_solver_spec() {
  SolverSpec spec;
  if (const char* env = std::getenv("QN_SOLVER")) {
    spec.command = env;
    return spec;
  }
  std::error_code ec;
  fs::path exe = fs::read_symlink("/proc/self/exe", ec);
  if (!ec) {
    fs::path dir = exe.parent_path();
    for (int up = 0; up < 4; ++up) {
      fs::path cand = dir / "qn-cadical";
      if (fs::exists(cand, ec)) {
        spec.command = cand.string();
        return spec;
      }
      dir = dir.parent_path();
    }
  }
  spec.command = "qn-cadical";
  return spec;
}

namespace {

fs::path temp_cnf_path() {
  static std::atomic<uint64_t> counter{0};
  std::ostringstream name;
  name << "qn-" << getpid() << "-" << counter.fetch_add(1) << "-"
       << std::chrono::steady_clock::now().time_since_epoch().count() << ".cnf";
  return fs::temp_directory_path() / name.str();
}

std::string build_command(const SolverSpec& spec, const std::string& path) {
  std::string cmd = spec.command;
  auto pos = cmd.find("{cnf}");
  if (pos != std::string::npos) cmd.replace(pos, 5, path);
  else cmd += " " + path;
  std::ostringstream full;
  full << "timeout " << (long long)std::max(1.0, spec.timeout_seconds) << " " << cmd
       << " 2>/dev/null";
  return full.str();
}

}  // namespace

ExternalResult solve_external(const CnfFormula& f, const SolverSpec& spec) {
  ExternalResult res;
  fs::path path = temp_cnf_path();
  {
    std::ofstream os(path);
    write_dimacs(f, os);
    if (!os) {
      res.verdict = Verdict::error;
      res.message = "cannot write " + path.string();
      return res;
    }
  }
  auto t0 = std::chrono::steady_clock::now();
  std::string output;
  std::string cmd = build_command(spec, path.string());
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    fs::remove(path);
    res.verdict = Verdict::error;
    res.message = "popen failed";
    return res;
  }
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
  int status = pclose(pipe);
  fs::remove(path);
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

  if (res.exit_code == 124) {
    res.verdict = Verdict::timeout;
    return res;
  }
  if (res.exit_code == spec.unsat_exit) {
    res.verdict = Verdict::unsat;
    return res;
  }
  if (res.exit_code != spec.sat_exit) {
    res.verdict = Verdict::error;
    res.message = "unexpected exit code " + std::to_string(res.exit_code);
    return res;
  }
  // SAT: collect v-lines, then re-check the model before trusting it.
  res.model.assign(f.num_vars + 1, 0);
  std::istringstream ss(output);
  std::string line;
  bool saw_values = false;
  while (std::getline(ss, line)) {
    if (line.empty() || line[0] != 'v') continue;
    std::istringstream ls(line.substr(1));
    long long lit;
    while (ls >> lit) {
      if (lit == 0) continue;
      saw_values = true;
      if (std::llabs(lit) <= f.num_vars) res.model[std::llabs(lit)] = lit > 0;
    }
  }
  if (!saw_values) {
    res.verdict = Verdict::error;
    res.message = "sat exit without v-lines";
    return res;
  }
  if (!model_satisfies(f, res.model)) {
    res.verdict = Verdict::error;
    res.message = "model fails clause check (solver/encoding mismatch)";
    return res;
  }
  res.verdict = Verdict::sat;
  return res;
}

std::vector<Cube> generate_cubes_builtin(const CnfFormula& f, int depth) {
  if (depth < 0) throw std::invalid_argument("negative cube depth");
  if (depth > 24) throw std::invalid_argument("cube depth too large");
  std::vector<long long> occ(f.num_vars + 1, 0);
  for (const auto& cl : f.clauses)
    for (Lit l : cl) ++occ[std::abs(l)];
  std::vector<int> vars(f.num_vars);
  for (int v = 1; v <= f.num_vars; ++v) vars[v - 1] = v;
  std::stable_sort(vars.begin(), vars.end(), [&](int a, int b) { return occ[a] > occ[b]; });
  depth = std::min<int>(depth, f.num_vars);
  vars.resize(depth);
  std::vector<Cube> cubes;
  cubes.reserve((size_t)1 << depth);
  for (uint64_t m = 0; m < (1ull << depth); ++m) {
    Cube cu;
    for (int j = 0; j < depth; ++j)
      cu.lits.push_back((m >> j) & 1 ? vars[j] : -vars[j]);
    cubes.push_back(std::move(cu));
  }
  return cubes;
}

std::vector<Cube> generate_cubes_external(const CnfFormula& f, const std::string& command) {
  fs::path path = temp_cnf_path();
  fs::path outpath = path;
  outpath += ".cubes";
  {
    std::ofstream os(path);
    write_dimacs(f, os);
  }
  std::string cmd = command;
  auto sub = [&](const std::string& key, const std::string& val) {
    auto pos = cmd.find(key);
    if (pos != std::string::npos) cmd.replace(pos, key.size(), val);
  };
  sub("{cnf}", path.string());
  bool to_file = cmd.find("{out}") != std::string::npos;
  sub("{out}", outpath.string());
  std::string output;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) throw std::runtime_error("cube tool: popen failed");
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
  int status = pclose(pipe);
  fs::remove(path);
  if (!WIFEXITED(status)) throw std::runtime_error("cube tool crashed");
  std::vector<Cube> cubes;
  if (to_file) {
    std::ifstream is(outpath);
    if (!is) throw std::runtime_error("cube tool produced no output file");
    cubes = parse_cube_lines(is);
    fs::remove(outpath);
  } else {
    std::istringstream is(output);
    cubes = parse_cube_lines(is);
  }
  return cubes;
}

CampaignReport run_campaign(const CnfFormula& base, const std::vector<Cube>& cubes,
                            const SolverSpec& spec, const CampaignOptions& opts) {
  CampaignReport report;
  report.cubes.assign(cubes.size(), {});
  if (cubes.empty()) {
    report.verdict = Verdict::error;
    return report;
  }

  // Resume: replay terminal results from a previous journal.
  if (opts.resume && !opts.journal_path.empty()) {
    std::ifstream is(opts.journal_path);
    std::string line;
    while (is && std::getline(is, line)) {
      if (line.empty()) continue;
      json j = json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.contains("cube")) continue;
      size_t i = j["cube"].get<size_t>();
      if (i >= cubes.size()) continue;
      std::string v = j.value("verdict", "unknown");
      if (v == "unsat") {
        report.cubes[i].verdict = Verdict::unsat;
        report.cubes[i].seconds = j.value("seconds", 0.0);
      } else if (v == "sat") {
        report.cubes[i].verdict = Verdict::sat;
        report.cubes[i].seconds = j.value("seconds", 0.0);
        if (report.sat_cube < 0 && j.contains("model")) {
          report.model.assign(base.num_vars + 1, 0);
          for (long long lit : j["model"].get<std::vector<long long>>())
            if (lit > 0 && lit <= base.num_vars) report.model[lit] = 1;
          report.sat_cube = (int)i;
        }
      }
    }
  }

  std::mutex mu;
  std::ofstream journal;
  if (!opts.journal_path.empty())
    journal.open(opts.journal_path, opts.resume ? std::ios::app : std::ios::trunc);

  std::atomic<bool> cancel{false};
  if (report.sat_cube >= 0) cancel = true;
  std::atomic<size_t> next{0};

  auto solve_cube = [&](size_t i) {
    CnfFormula sub = base;
    for (Lit l : cubes[i].lits) sub.add_unit(l);
    ExternalResult r = solve_external(sub, spec);
    ++report.cubes[i].attempts;
    if (r.verdict == Verdict::error) {  // one retry per cube
      r = solve_external(sub, spec);
      ++report.cubes[i].attempts;
    }
    std::lock_guard<std::mutex> lock(mu);
    report.cubes[i].verdict = r.verdict;
    report.cubes[i].seconds = r.wall_seconds;
    if (r.verdict == Verdict::sat && report.sat_cube < 0) {
      report.sat_cube = (int)i;
      report.model = r.model;
      cancel = true;
    }
    if (journal.is_open()) {
      json j{{"cube", i},
             {"verdict", verdict_name(r.verdict)},
             {"seconds", r.wall_seconds}};
      if (r.verdict == Verdict::sat) {
        std::vector<long long> lits;
        for (int v = 1; v <= base.num_vars; ++v) lits.push_back(r.model[v] ? v : -v);
        j["model"] = lits;
      }
      journal << j.dump() << "\n" << std::flush;
    }
  };

  int workers = std::max(1, opts.workers);
  auto worker = [&](int w) {
    if (opts.static_schedule) {
      for (size_t i = (size_t)w; i < cubes.size(); i += (size_t)workers) {
        if (cancel) return;
        if (report.cubes[i].verdict == Verdict::sat ||
            report.cubes[i].verdict == Verdict::unsat)
          continue;
        solve_cube(i);
      }
    } else {
      while (!cancel) {
        size_t i = next.fetch_add(1);
        if (i >= cubes.size()) return;
        if (report.cubes[i].verdict == Verdict::sat ||
            report.cubes[i].verdict == Verdict::unsat)
          continue;
        solve_cube(i);
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker, w);
  for (auto& t : pool) t.join();

  bool any_sat = false, all_unsat = true;
  for (const auto& cs : report.cubes) {
    report.total_cpu_seconds += cs.seconds;
    if (cs.verdict == Verdict::sat) any_sat = true;
    if (cs.verdict != Verdict::unsat) all_unsat = false;
  }
  report.verdict = any_sat ? Verdict::sat : (all_unsat ? Verdict::unsat : Verdict::unknown);
  return report;
}

}  // namespace qn
