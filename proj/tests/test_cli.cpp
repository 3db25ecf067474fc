#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "tornheim/app.hpp"

using namespace tornheim;
using namespace tornheim::app;
using nlohmann::json;

namespace {

std::string parse_failure(std::string_view text) {
  try {
    parse_complex(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

EvalOutcome run(FunctionId f, TriplePoint p, std::string method = "auto") {
  EvalRequest req;
  req.function = f;
  req.point = p;
  req.method = std::move(method);
  return evaluate(req);
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(json::parse(line));
  }
  return out;
}

std::string batch(const std::string& input, InputKind kind, unsigned threads = 1, Format fmt = Format::Json,
                  BatchSummary* summary = nullptr) {
  BatchOptions opts;
  opts.threads = threads;
  opts.format = fmt;
  std::istringstream in(input);
  std::ostringstream out;
  const BatchSummary s = run_batch(in, out, kind, opts);
  if (summary != nullptr) *summary = s;
  return out.str();
}

}  // namespace

TEST_CASE("complex literals: accepted forms") {
  CHECK(parse_complex("2") == Complex(2.0, 0.0));
  CHECK(parse_complex("-1.5") == Complex(-1.5, 0.0));
  CHECK(parse_complex("1+1i") == Complex(1.0, 1.0));
  CHECK(parse_complex("1-1i") == Complex(1.0, -1.0));
  CHECK(parse_complex(" 2.5e-1-3E2i ") == Complex(0.25, -300.0));
  CHECK(parse_complex("+3") == Complex(3.0, 0.0));
  CHECK(parse_complex("-0.5+.25i") == Complex(-0.5, 0.25));
  CHECK(parse_real("1e-3") == 1e-3);
}

TEST_CASE("complex literals: rejections name the offending token") {
  CHECK(parse_failure("").find("end of input") != std::string::npos);
  CHECK(parse_failure("1+i").find("'i'") != std::string::npos);
  CHECK(parse_failure("2x").find("'x'") != std::string::npos);
  CHECK(parse_failure("1+2j").find("'j'") != std::string::npos);
  CHECK(parse_failure("3i") != "");
  CHECK(parse_failure("1 + 2i") != "");
  CHECK(parse_failure("nan") != "");
  CHECK(parse_failure("1+2i3") != "");
  CHECK_THROWS_AS(parse_real("1+2i"), ParseError);
}

TEST_CASE("complex literals round-trip at 17 digits") {
  for (Complex z : {Complex(0.1, -0.2), Complex(2.0 / 3.0, 1e-300), Complex(-1e22, 3.141592653589793), Complex(-0.0, -0.0),
                    Complex(5e-324, 1.7976931348623157e308)}) {
    const Complex back = parse_complex(format_complex(z));
    CHECK(back == z);
    CHECK(std::signbit(back.imag()) == std::signbit(z.imag()));
  }
  CHECK(format_complex({1.5, -2.0}) == "1.5-2i");
}

TEST_CASE("evaluate: statuses and exit codes") {
  const EvalOutcome ok = run(FunctionId::T, {2.0, 2.0, 2.0});
  CHECK(ok.status == "ok");
  CHECK(ok.exit_code == kExitOk);
  REQUIRE(ok.result.has_value());
  const OracleResult o = oracle_T({2.0, 2.0, 2.0});
  CHECK(std::abs(ok.result->value - o.value) <= 1e-8);

  const EvalOutcome sing = run(FunctionId::T, {0.5, 0.5, 0.5});
  CHECK(sing.status == "singular");
  CHECK(sing.exit_code == kExitSingular);
  REQUIRE(!sing.reports.empty());
  CHECK(sing.reports.front().hyperplane() == "t+u in Z<=1");

  const EvalOutcome pref = run(FunctionId::T, {2.0, 2.5, 2.7}, "iv");
  CHECK(pref.status == "prefactor_zero");
  CHECK(pref.exit_code == kExitSingular);

  EvalRequest tight;
  tight.point = {{-2.4, 0.9}, {-2.3, -0.8}, {-2.2, 0.7}};
  tight.cfg.tol = 1e-15;
  tight.cfg.max_order = 8;
  const EvalOutcome conv = evaluate(tight);
  CHECK(conv.status == "convergence");
  CHECK(conv.exit_code == kExitConvergence);

  const EvalOutcome bad_method = run(FunctionId::S3, {2.0, 2.0, 2.0}, "legacy");
  CHECK(bad_method.status == "domain");
  CHECK(bad_method.exit_code == kExitUsage);

  // same outcome class, same exit code, every time
  for (int i = 0; i < 3; ++i) CHECK(run(FunctionId::T, {0.5, 0.5, 0.5}).exit_code == kExitSingular);
}

TEST_CASE("evaluate: methods for S1 and S2") {
  const TriplePoint p{2.0, 2.0, 2.0};
  const EvalOutcome a = run(FunctionId::S1, p, "new"), b = run(FunctionId::S1, p, "legacy");
  REQUIRE(a.result.has_value());
  REQUIRE(b.result.has_value());
  CHECK(std::abs(a.result->value - b.result->value) <= 1e-9);
  const EvalOutcome c = run(FunctionId::S2, p, "new"), d = run(FunctionId::S2, p, "legacy");
  CHECK(std::abs(c.result->value - d.result->value) <= 1e-9);
}

TEST_CASE("JSON records always carry the stable fields") {
  for (const EvalOutcome& out : {run(FunctionId::T, {2.0, 2.0, 2.0}), run(FunctionId::T, {0.5, 0.5, 0.5})}) {
    const json j = json::parse(render(out, Format::Json, "p1"));
    for (const char* key : {"value", "err", "terms", "method", "status"}) CHECK(j.contains(key));
    CHECK(j["value"].contains("re"));
    CHECK(j["value"].contains("im"));
    CHECK(j["label"] == "p1");
  }
  const json j = json::parse(render(run(FunctionId::T, {2.0, 2.0, 2.0}), Format::Json));
  CHECK(j["status"] == "ok");
  CHECK(j["value"]["re"].get<double>() == doctest::Approx(std::pow(kPi, 6) / 2835.0).epsilon(1e-12));
  CHECK(j["terms"].get<long long>() > 0);
  CHECK(render(run(FunctionId::T, {2.0, 2.0, 2.0}), Format::Csv).find("ok") != std::string::npos);
  CHECK(csv_header() == "label,function,status,value_re,value_im,err,terms,method,message");
}

TEST_CASE("S3 output does not depend on the order of s and t") {
  const EvalOutcome a = run(FunctionId::S3, {{1.0, 1.0}, {1.0, -1.0}, 2.0});
  const EvalOutcome b = run(FunctionId::S3, {{1.0, -1.0}, {1.0, 1.0}, 2.0});
  REQUIRE(a.result.has_value());
  REQUIRE(b.result.has_value());
  CHECK(std::isfinite(std::abs(a.result->value)));
  CHECK(std::abs(a.result->value - b.result->value) <= 1e-10);
}

TEST_CASE("batch: three CSV points in the convergence region") {
  const std::string input =
      "label,s_re,s_im,t_re,t_im,u_re,u_im\n"
      "a,2,0,2,0,2,0\n"
      "\"b, quoted\",2.5,0.3,2.1,-0.4,2.8,0\n"
      "c,3,0,2,0,2.5,0\n";
  BatchSummary sum;
  const auto rows = json_lines(batch(input, InputKind::Csv, 2, Format::Json, &sum));
  REQUIRE(rows.size() == 3);
  CHECK(sum.records == 3);
  CHECK(sum.failures == 0);
  CHECK(rows[1]["label"] == "b, quoted");
  const TriplePoint pts[] = {{2.0, 2.0, 2.0}, {{2.5, 0.3}, {2.1, -0.4}, 2.8}, {3.0, 2.0, 2.5}};
  for (int i = 0; i < 3; ++i) {
    CHECK(rows[static_cast<std::size_t>(i)]["status"] == "ok");
    const OracleResult o = oracle_T(pts[i]);
    const Complex v(rows[static_cast<std::size_t>(i)]["value"]["re"].get<double>(),
                    rows[static_cast<std::size_t>(i)]["value"]["im"].get<double>());
    CHECK(std::abs(v - o.value) <= 1e-8 + o.tail_bound);
  }
}

TEST_CASE("batch: empty input gives empty output") {
  BatchSummary sum;
  CHECK(batch("", InputKind::Csv, 1, Format::Csv, &sum).empty());
  CHECK(batch("", InputKind::JsonLines, 1, Format::Json, &sum).empty());
  CHECK(sum.records == 0);
}

TEST_CASE("batch: a malformed line becomes an error record for that line") {
  const std::string input =
      "a,2,0,2,0,2,0\n"
      "b,2,0,2x,0,2,0\n"
      "c,3,0,2,0,2.5,0\n";
  BatchSummary sum;
  const auto rows = json_lines(batch(input, InputKind::Csv, 1, Format::Json, &sum));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["status"] == "ok");
  CHECK(rows[1]["status"] == "parse_error");
  CHECK(rows[1]["message"].get<std::string>().find("line 2") != std::string::npos);
  CHECK(rows[1]["value"]["re"].is_null());
  CHECK(rows[2]["status"] == "ok");
  CHECK(sum.failures == 1);
}

TEST_CASE("batch: JSON lines input") {
  const std::string input =
      "{\"label\": \"x\", \"s\": \"2\", \"t\": 2, \"u\": {\"re\": 2, \"im\": 0}}\n"
      "\n"
      "{\"s\": \"0.5\", \"t\": \"0.5\", \"u\": \"0.5\"}\n"
      "not json\n";
  const auto rows = json_lines(batch(input, InputKind::JsonLines));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["status"] == "ok");
  CHECK(rows[0]["label"] == "x");
  CHECK(rows[1]["status"] == "singular");
  CHECK(rows[2]["status"] == "parse_error");
  CHECK(rows[2]["message"].get<std::string>().find("line 4") != std::string::npos);
}

TEST_CASE("batch: output order is input order regardless of threads") {
  std::ostringstream input;
  for (int i = 0; i < 24; ++i) input << "p" << i << ',' << 2.0 + 0.05 * i << ",0," << 2.9 - 0.03 * i << ",0.1,2.2,0\n";
  const std::string one = batch(input.str(), InputKind::Csv, 1, Format::Csv);
  const std::string four = batch(input.str(), InputKind::Csv, 4, Format::Csv);
  CHECK(one == four);
  std::istringstream lines(four);
  std::string line;
  std::getline(lines, line);
  CHECK(line == csv_header());
  for (int i = 0; i < 24; ++i) {
    std::getline(lines, line);
    CHECK(line.rfind("p" + std::to_string(i) + ",", 0) == 0);
  }
}

TEST_CASE("batch thread count honours TORNHEIM_THREADS") {
  CHECK(batch_threads(3) == 3);
  setenv("TORNHEIM_THREADS", "2", 1);
  CHECK(batch_threads(0) == 2);
  unsetenv("TORNHEIM_THREADS");
  CHECK(batch_threads(0) >= 1);
}

TEST_CASE("bench: term counts grow as the tolerance shrinks") {
  const std::vector<PointRecord> points = default_bench_points(6);
  CHECK(points.size() == 6);
  EvalConfig loose, tight;
  loose.tol = 1e-6;
  tight.tol = 1e-12;
  const auto a = run_bench(points, loose), b = run_bench(points, tight);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].s1_terms <= b[i].s1_terms);
    CHECK(a[i].s1_legacy_terms <= b[i].s1_legacy_terms);
    CHECK(a[i].s2_terms <= b[i].s2_terms);
    CHECK(a[i].s2_legacy_terms <= b[i].s2_legacy_terms);
  }
}

TEST_CASE("bench: (2,2,2) and the CSV report") {
  const auto rows = run_bench({{"diag", {2.0, 2.0, 2.0}}}, EvalConfig{});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].s1_diff <= 1e-9);
  CHECK(rows[0].s2_diff <= 1e-9);
  std::ostringstream csv;
  write_bench_csv(csv, rows);
  const std::string text = csv.str();
  CHECK(text.rfind("label,", 0) == 0);
  CHECK(text.find("\ndiag,") != std::string::npos);
  CHECK(bench_win_fraction(rows) >= 0.0);
}

TEST_CASE("batch: input kind from the file name, else from the first line") {
  CHECK(input_kind_for("pts.CSV") == InputKind::Csv);
  CHECK(input_kind_for("pts.jsonl") == InputKind::JsonLines);
  CHECK(input_kind_for("-") == InputKind::Sniff);
  const auto csv = json_lines(batch("\nlabel,s_re,s_im,t_re,t_im,u_re,u_im\na,2,0,2,0,2,0\n", InputKind::Sniff));
  REQUIRE(csv.size() == 1);
  CHECK(csv[0]["status"] == "ok");
  const auto jl = json_lines(batch("  {\"s\": 2, \"t\": 2, \"u\": 2}\n", InputKind::Sniff));
  REQUIRE(jl.size() == 1);
  CHECK(jl[0]["status"] == "ok");
}
