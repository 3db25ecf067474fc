#pragma once

// Front-end logic behind the `tornheim` executable, kept out of main() so the
// tests and the Python module can drive it directly.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tornheim/tornheim.hpp"

namespace tornheim::app {

// Process exit codes. They depend on the outcome class only.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitSingular = 2;
inline constexpr int kExitConvergence = 3;

/// Malformed textual input (complex literal, CSV field, JSON record).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parses `<real>`, `<real>+<real>i` or `<real>-<real>i` (decimal or
/// scientific). Surrounding blanks are allowed, nothing else is.
Complex parse_complex(std::string_view text);

/// Strict real literal, same number syntax as parse_complex.
double parse_real(std::string_view text);

/// 17 significant digits; parse_complex(format_complex(z)) == z.
std::string format_complex(Complex z);

struct PointRecord {
  std::string label;
  TriplePoint point;
};

enum class Format { Text, Json, Csv };
Format format_from_string(std::string_view name);

struct EvalRequest {
  FunctionId function = FunctionId::T;
  TriplePoint point;
  EvalConfig cfg;
  /// "auto", "i".."viii" for T; "new" or "legacy" for S1/S2.
  std::string method = "auto";
};

struct EvalOutcome {
  FunctionId function = FunctionId::T;
  TriplePoint point;
  /// ok, singular, pole, prefactor_zero, method_unavailable, convergence,
  /// domain, parse_error
  std::string status = "ok";
  std::optional<SeriesValue> result;
  std::vector<SingularityReport> reports;
  std::string message;
  int exit_code = kExitOk;
};

/// Evaluates one point; every library error becomes a status, never a throw.
EvalOutcome evaluate(const EvalRequest& req);

/// One record in the requested format (text, a JSON object, or a CSV row
/// without header). The JSON object always has value, err, terms, method, status.
std::string render(const EvalOutcome& out, Format fmt, const std::string& label = "");
std::string csv_header();

// ---------------------------------------------------------------------------
// Batch

enum class InputKind { Csv, JsonLines, Sniff };

/// Guess from the file name: .csv is CSV, .jsonl/.json JSON lines. Anything
/// else (stdin included) is Sniff: the first non-blank line decides, '{' means
/// JSON lines.
InputKind input_kind_for(std::string_view path);

struct BatchOptions {
  FunctionId function = FunctionId::T;
  EvalConfig cfg;
  std::string method = "auto";
  Format format = Format::Json;
  /// 0 means TORNHEIM_THREADS, falling back to the number of cores.
  unsigned threads = 0;
};

struct BatchSummary {
  std::size_t records = 0;
  std::size_t failures = 0;
};

/// Reads every line of `in`, evaluates them (in parallel), and writes one
/// record per input line in input order. Blank lines and a CSV header line
/// are skipped. Per-line parse failures become error records.
BatchSummary run_batch(std::istream& in, std::ostream& out, InputKind kind, const BatchOptions& opts);

/// Worker count for batch mode.
unsigned batch_threads(unsigned requested);

// ---------------------------------------------------------------------------
// Benchmark: eta-based S1/S2 against the legacy representations.

struct BenchRow {
  std::string label;
  TriplePoint point;
  std::int64_t s1_terms = 0, s1_legacy_terms = 0, s2_terms = 0, s2_legacy_terms = 0;
  double s1_ms = 0, s1_legacy_ms = 0, s2_ms = 0, s2_legacy_ms = 0;
  /// |new - legacy|
  double s1_diff = 0, s2_diff = 0;
};

/// Fixed-seed points clear (by >= 0.1) of every singular set of S1 and S2.
std::vector<PointRecord> default_bench_points(int count = 40);

std::vector<BenchRow> run_bench(const std::vector<PointRecord>& points, const EvalConfig& cfg);

/// Fraction of rows where the eta-based count is <= the legacy count, over
/// both functions.
double bench_win_fraction(const std::vector<BenchRow>& rows);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

// ---------------------------------------------------------------------------
// Self test

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct SelftestOptions {
  /// Flip the sign pattern of the eta^- coefficients while the suites run.
  bool inject_eta_sign_fault = false;
};

std::vector<SuiteResult> run_selftest(const SelftestOptions& opts = {});

}  // namespace tornheim::app
