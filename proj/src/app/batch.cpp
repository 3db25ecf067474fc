#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "tornheim/app.hpp"

namespace tornheim::app {
namespace {

struct Job {
  std::size_t line = 0;
  PointRecord record;
  std::string error;  // non-empty: the line did not parse
};

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw ParseError("unterminated quote");
  return fields;
}

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

bool is_csv_header(const std::string& line) {
  std::string head = line.substr(0, line.find(','));
  head.erase(std::remove_if(head.begin(), head.end(), [](unsigned char c) { return std::isspace(c); }), head.end());
  std::transform(head.begin(), head.end(), head.begin(), [](unsigned char c) { return std::tolower(c); });
  return head == "label";
}

PointRecord parse_csv_record(const std::string& line) {
  const std::vector<std::string> f = split_csv(line);
  if (f.size() != 7) {
    throw ParseError("expected 7 columns (label,s_re,s_im,t_re,t_im,u_re,u_im), got " + std::to_string(f.size()));
  }
  PointRecord r;
  r.label = f[0];
  auto pair = [&](std::size_t i) { return Complex(parse_real(f[i]), parse_real(f[i + 1])); };
  r.point = {pair(1), pair(3), pair(5)};
  return r;
}

Complex json_complex(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const nlohmann::json& v = j.at(key);
  if (v.is_string()) return parse_complex(v.get<std::string>());
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_object() && v.contains("re")) {
    const double im = v.contains("im") ? v.at("im").get<double>() : 0.0;
    return {v.at("re").get<double>(), im};
  }
  throw ParseError(std::string("field '") + key + "' is not a complex literal");
}

PointRecord parse_json_record(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("record is not a JSON object");
  PointRecord r;
  if (j.contains("label")) r.label = j.at("label").is_string() ? j.at("label").get<std::string>() : j.at("label").dump();
  try {
    r.point = {json_complex(j, "s"), json_complex(j, "t"), json_complex(j, "u")};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad field: ") + e.what());
  }
  return r;
}

std::vector<Job> read_jobs(std::istream& in, InputKind kind) {
  std::vector<Job> jobs;
  std::string line;
  std::size_t number = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    const bool was_first = first;
    first = false;
    if (kind == InputKind::Sniff) {
      kind = line[line.find_first_not_of(" \t")] == '{' ? InputKind::JsonLines : InputKind::Csv;
    }
    if (kind == InputKind::Csv && was_first && is_csv_header(line)) continue;
    Job job;
    job.line = number;
    try {
      job.record = kind == InputKind::Csv ? parse_csv_record(line) : parse_json_record(line);
    } catch (const ParseError& e) {
      job.error = e.what();
    }
    jobs.push_back(std::move(job));
  }
  return jobs;
}

}  // namespace

InputKind input_kind_for(std::string_view path) {
  if (path.size() >= 4) {
    std::string ext(path.substr(path.size() - 4));
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".csv") return InputKind::Csv;
  }
  if (path.ends_with(".jsonl") || path.ends_with(".json")) return InputKind::JsonLines;
  return InputKind::Sniff;
}

unsigned batch_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TORNHEIM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

BatchSummary run_batch(std::istream& in, std::ostream& out, InputKind kind, const BatchOptions& opts) {
  const std::vector<Job> jobs = read_jobs(in, kind);
  std::vector<EvalOutcome> results(jobs.size());

  auto run_one = [&](std::size_t i) {
    const Job& job = jobs[i];
    if (!job.error.empty()) {
      EvalOutcome o;
      o.function = opts.function;
      o.status = "parse_error";
      o.exit_code = kExitUsage;
      o.message = "line " + std::to_string(job.line) + ": " + job.error;
      results[i] = std::move(o);
      return;
    }
    EvalRequest req;
    req.function = opts.function;
    req.point = job.record.point;
    req.cfg = opts.cfg;
    req.method = opts.method;
    results[i] = evaluate(req);
    if (results[i].status != "ok") results[i].message = "line " + std::to_string(job.line) + ": " + results[i].message;
  };

  const unsigned workers = std::min<std::size_t>(batch_threads(opts.threads), std::max<std::size_t>(1, jobs.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) run_one(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  BatchSummary summary;
  if (!jobs.empty() && opts.format == Format::Csv) out << csv_header() << '\n';
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const std::string label = jobs[i].record.label.empty() ? "line" + std::to_string(jobs[i].line) : jobs[i].record.label;
    out << render(results[i], opts.format, label) << '\n';
    ++summary.records;
    if (results[i].status != "ok") ++summary.failures;
  }
  return summary;
}

}  // namespace tornheim::app
