// tornheim: evaluate T(s,t,u) and S1..S4 from the command line.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "json.hpp"
#include "tornheim/app.hpp"

using namespace tornheim;
using namespace tornheim::app;

namespace {

struct Common {
  std::string fn = "T";
  double tol = 1e-12;
  int max_order = 120;
  double proximity = 1e-6;
  std::string method = "auto";
  std::string format;

  EvalConfig config() const {
    EvalConfig cfg;
    cfg.tol = tol;
    cfg.max_order = max_order;
    cfg.singular_proximity = proximity;
    return cfg;
  }
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_format) {
  c.format = default_format;
  cmd->add_option("--fn", c.fn, "Function: T, S1, S2, S3 or S4")->capture_default_str();
  cmd->add_option("--tol", c.tol, "Absolute tolerance")->capture_default_str();
  cmd->add_option("--max-order", c.max_order, "Cap on the index shell (8..150)")->capture_default_str();
  cmd->add_option("--proximity", c.proximity, "Distance treated as on a singular hyperplane")->capture_default_str();
  cmd->add_option("--method", c.method, "T: auto, i..viii; S1/S2: new, legacy")->capture_default_str();
  cmd->add_option("--format", c.format, "text, json or csv")->capture_default_str();
}

int cmd_eval(const Common& c, const std::string& s, const std::string& t, const std::string& u) {
  EvalRequest req;
  try {
    req.function = function_from_string(c.fn);
    req.point = {parse_complex(s), parse_complex(t), parse_complex(u)};
    req.cfg = c.config();
    req.method = c.method;
    const Format fmt = format_from_string(c.format);
    const EvalOutcome out = evaluate(req);
    if (fmt == Format::Csv) std::cout << csv_header() << '\n';
    std::cout << render(out, fmt) << '\n';
    if (out.exit_code != kExitOk && fmt != Format::Text) std::cerr << out.message << '\n';
    return out.exit_code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_batch(const Common& c, const std::string& input, const std::string& output, const std::string& input_format,
              unsigned threads) {
  BatchOptions opts;
  try {
    opts.function = function_from_string(c.fn);
    opts.cfg = c.config();
    opts.cfg.validate();
    opts.method = c.method;
    opts.format = format_from_string(c.format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  opts.threads = threads;

  InputKind kind = input_kind_for(input);
  if (input_format == "csv") kind = InputKind::Csv;
  else if (input_format == "jsonl") kind = InputKind::JsonLines;

  std::ifstream file;
  std::istream* in = &std::cin;
  if (input != "-") {
    file.open(input);
    if (!file) {
      std::cerr << "error: cannot open " << input << '\n';
      return kExitUsage;
    }
    in = &file;
  }
  std::ofstream outfile;
  std::ostream* out = &std::cout;
  if (output != "-") {
    outfile.open(output);
    if (!outfile) {
      std::cerr << "error: cannot write " << output << '\n';
      return kExitUsage;
    }
    out = &outfile;
  }
  const BatchSummary sum = run_batch(*in, *out, kind, opts);
  std::cerr << sum.records << " records, " << sum.failures << " failed\n";
  return kExitOk;
}

int cmd_scan(double lo, double hi, double step, double radius, double tol, const std::string& format) {
  if (!(lo >= -6.0 && hi <= 1.5 && lo < hi)) {
    std::cerr << "error: scan range must satisfy -6 <= lo < hi <= 1.5\n";
    return kExitUsage;
  }
  std::vector<PoleCandidate> poles;
  try {
    EvalConfig cfg;
    cfg.tol = tol;
    poles = scan_poles(lo, hi, step, cfg, radius);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConvergence;
  }
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const PoleCandidate& p : poles) {
      arr.push_back({{"location", p.location}, {"residue", {{"re", p.residue.real()}, {"im", p.residue.imag()}}},
                     {"spread", p.spread}});
    }
    std::cout << nlohmann::json{{"range", {lo, hi}}, {"step", step}, {"poles", arr}}.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "location,residue_re,residue_im,spread\n";
    for (const PoleCandidate& p : poles) {
      std::printf("%.15g,%.15g,%.15g,%.3e\n", p.location, p.residue.real(), p.residue.imag(), p.spread);
    }
  } else {
    std::printf("%zu pole(s) of T(s,s,s) in [%g, %g]\n", poles.size(), lo, hi);
    for (const PoleCandidate& p : poles) {
      std::printf("  s = %-20.15g residue %.10g%+.3gi  (spread %.1e)\n", p.location, p.residue.real(), p.residue.imag(),
                  p.spread);
    }
  }
  return kExitOk;
}

int cmd_bench(double tol, int count, const std::string& output) {
  EvalConfig cfg;
  cfg.tol = tol;
  std::vector<BenchRow> rows;
  try {
    cfg.validate();
    rows = run_bench(default_bench_points(count), cfg);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (output == "-") {
    write_bench_csv(std::cout, rows);
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "error: cannot write " << output << '\n';
      return kExitUsage;
    }
    write_bench_csv(out, rows);
  }
  std::fprintf(stderr, "eta-based term count <= legacy in %.1f%% of %zu comparisons\n", 100.0 * bench_win_fraction(rows),
               2 * rows.size());
  return kExitOk;
}

int cmd_selftest(bool fault) {
  SelftestOptions opts;
  opts.inject_eta_sign_fault = fault;
  bool all = true;
  for (const SuiteResult& r : run_selftest(opts)) {
    std::printf("%s  %-22s %6.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds, r.detail.c_str());
    all = all && r.passed;
  }
  return all ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tornheim double zeta T(s,t,u) and the symmetric functions S1..S4"};
  app.require_subcommand(1);

  Common eval_opts;
  std::string s, t, u;
  auto* eval = app.add_subcommand("eval", "Evaluate one point");
  add_common(eval, eval_opts, "text");
  eval->add_option("--s", s, "s (complex literal, e.g. 2.5-0.3i)")->required();
  eval->add_option("--t", t, "t")->required();
  eval->add_option("--u", u, "u")->required();

  Common batch_opts;
  std::string input, output = "-", input_format = "auto";
  unsigned threads = 0;
  auto* batch = app.add_subcommand("batch", "Evaluate every point of a CSV or JSON-lines file");
  add_common(batch, batch_opts, "json");
  batch->add_option("--input,-i", input, "Input file ('-' for stdin)")->required();
  batch->add_option("--output,-o", output, "Output file ('-' for stdout)")->capture_default_str();
  batch->add_option("--input-format", input_format, "auto, csv or jsonl")->check(CLI::IsMember({"auto", "csv", "jsonl"}));
  batch->add_option("--threads", threads, "Worker threads (default TORNHEIM_THREADS or all cores)");

  double lo = -4.0, hi = 1.0, step = 0.01, radius = 1e-3, scan_tol = 1e-12;
  std::string scan_format = "text";
  auto* scan = app.add_subcommand("scan-poles", "Locate poles of T(s,s,s) on a real interval");
  scan->add_option("--lo", lo)->capture_default_str();
  scan->add_option("--hi", hi)->capture_default_str();
  scan->add_option("--step", step)->capture_default_str();
  scan->add_option("--radius", radius, "Residue circle radius")->capture_default_str();
  scan->add_option("--tol", scan_tol)->capture_default_str();
  scan->add_option("--format", scan_format)->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();

  double bench_tol = 1e-10;
  int bench_points = 40;
  std::string bench_out = "-";
  auto* bench = app.add_subcommand("bench", "Term counts and timings, eta-based vs legacy S1/S2 (CSV)");
  bench->add_option("--tol", bench_tol)->capture_default_str();
  bench->add_option("--points", bench_points, "Number of fixed-seed points")->check(CLI::Range(1, 10000))->capture_default_str();
  bench->add_option("--output,-o", bench_out)->capture_default_str();

  bool fault = false;
  auto* selftest = app.add_subcommand("selftest", "Run the oracle and identity suites");
  selftest->add_flag("--inject-eta-sign-fault", fault, "Break the eta^- sign pattern (the oracle grid must then fail)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*eval) return cmd_eval(eval_opts, s, t, u);
  if (*batch) return cmd_batch(batch_opts, input, output, input_format, threads);
  if (*scan) return cmd_scan(lo, hi, step, radius, scan_tol, scan_format);
  if (*bench) return cmd_bench(bench_tol, bench_points, bench_out);
  if (*selftest) return cmd_selftest(fault);
  return kExitUsage;
}
