#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "tornheim/app.hpp"

namespace tornheim::app {
namespace {

using nlohmann::json;

SeriesValue dispatch(const EvalRequest& req) {
  const std::string& m = req.method;
  switch (req.function) {
    case FunctionId::T:
      if (m == "new" || m == "legacy") throw DomainError("method '" + m + "' does not apply to T");
      return eval_T(req.point, req.cfg, recombination_from_string(m));
    case FunctionId::S1:
    case FunctionId::S2: {
      const bool s1 = req.function == FunctionId::S1;
      if (m == "legacy") return s1 ? eval_S1_legacy(req.point, req.cfg) : eval_S2_legacy(req.point, req.cfg);
      if (m != "auto" && m != "new") throw DomainError("method '" + m + "' does not apply to S1/S2 (new, legacy)");
      return s1 ? eval_S1(req.point, req.cfg) : eval_S2(req.point, req.cfg);
    }
    case FunctionId::S3:
    case FunctionId::S4:
      if (m != "auto" && m != "new") throw DomainError("method '" + m + "' does not apply to S3/S4");
      return eval_S(req.function, req.point, req.cfg);
  }
  throw DomainError("unknown function");
}

void fail(EvalOutcome& out, const char* status, int code, const std::exception& e) {
  out.status = status;
  out.exit_code = code;
  out.message = e.what();
}

// The nearest declared hyperplane, reported alongside a successful value.
std::vector<SingularityReport> nearest_report(const TriplePoint& p, FunctionId f) {
  std::vector<SingularityReport> all = classify(p, f);
  if (all.empty()) return all;
  auto it = std::min_element(all.begin(), all.end(),
                             [](const SingularityReport& a, const SingularityReport& b) { return a.distance < b.distance; });
  return {*it};
}

json report_json(const SingularityReport& r) {
  return {{"hyperplane", r.hyperplane()}, {"distance", r.distance}, {"function", std::string(to_string(r.function))}};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

EvalOutcome evaluate(const EvalRequest& req) {
  EvalOutcome out;
  out.function = req.function;
  out.point = req.point;
  try {
    req.cfg.validate();
    if (!req.point.finite()) throw DomainError("non-finite argument");
    out.result = dispatch(req);
    out.reports = nearest_report(req.point, req.function);
  } catch (const SingularPointError& e) {
    fail(out, "singular", kExitSingular, e);
    out.reports = e.reports();
  } catch (const PrefactorZeroError& e) {
    fail(out, "prefactor_zero", kExitSingular, e);
  } catch (const MethodUnavailableError& e) {
    fail(out, "method_unavailable", kExitSingular, e);
  } catch (const PoleError& e) {
    fail(out, "pole", kExitSingular, e);
  } catch (const ConvergenceError& e) {
    fail(out, "convergence", kExitConvergence, e);
  } catch (const ParseError& e) {
    fail(out, "parse_error", kExitUsage, e);
  } catch (const DomainError& e) {
    fail(out, "domain", kExitUsage, e);
  }
  return out;
}

std::string csv_header() { return "label,function,status,value_re,value_im,err,terms,method,message"; }

std::string render(const EvalOutcome& out, Format fmt, const std::string& label) {
  const std::string fn(to_string(out.function));
  const SeriesValue* r = out.result ? &*out.result : nullptr;

  if (fmt == Format::Json) {
    json j;
    if (!label.empty()) j["label"] = label;
    j["function"] = fn;
    j["point"] = {{"s", format_complex(out.point.s)}, {"t", format_complex(out.point.t)}, {"u", format_complex(out.point.u)}};
    j["value"] = r ? json{{"re", r->value.real()}, {"im", r->value.imag()}} : json{{"re", nullptr}, {"im", nullptr}};
    j["err"] = r ? json(r->err_estimate) : json(nullptr);
    j["terms"] = r ? json(r->terms_used) : json(nullptr);
    j["method"] = r ? json(r->method) : json(nullptr);
    j["status"] = out.status;
    if (r) {
      j["max_order"] = r->max_order;
      j["converged"] = r->converged;
    }
    if (!out.message.empty()) j["message"] = out.message;
    json reps = json::array();
    for (const SingularityReport& rep : out.reports) reps.push_back(report_json(rep));
    j["singularities"] = reps;
    return j.dump();
  }

  if (fmt == Format::Csv) {
    std::ostringstream os;
    os << csv_escape(label) << ',' << fn << ',' << out.status << ',';
    if (r) {
      os << num(r->value.real()) << ',' << num(r->value.imag()) << ',' << num(r->err_estimate) << ','
         << r->terms_used << ',' << r->method;
    } else {
      os << ",,,,";
    }
    os << ',' << csv_escape(out.message);
    return os.str();
  }

  std::ostringstream os;
  if (!label.empty()) os << label << ": ";
  os << fn << '(' << format_complex(out.point.s) << ", " << format_complex(out.point.t) << ", "
     << format_complex(out.point.u) << ')';
  if (r) {
    os << " = " << format_complex(r->value) << '\n'
       << "  err " << r->err_estimate << "  terms " << r->terms_used << "  order " << r->max_order
       << "  method " << r->method << '\n';
    for (const SingularityReport& rep : out.reports) {
      os << "  nearest singular hyperplane: " << rep.hyperplane() << " (distance " << rep.distance << ")\n";
    }
  } else {
    os << ": " << out.status << '\n' << "  " << out.message << '\n';
    for (const SingularityReport& rep : out.reports) {
      os << "  on/near " << rep.hyperplane() << " (distance " << rep.distance << ")\n";
    }
  }
  std::string text = os.str();
  if (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

}  // namespace tornheim::app
