#include "frankl/cli.hpp"

#include <iomanip>
#include <sstream>

#include "frankl/acceptance.hpp"
#include "frankl/certificate.hpp"
#include "frankl/lp.hpp"
#include "frankl/theorems.hpp"

namespace frankl::cli {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename T>
T need(const std::optional<T>& v, const char* flag, const std::string& command) {
  if (!v) throw UsageError("'" + command + "' needs --" + flag);
  return *v;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

bool witness_ok(const SetFamily& w, std::size_t size, std::optional<std::size_t> cap) {
  return is_union_closed(w) && w.size() == size && (!cap || max_frequency(w).count <= *cap);
}

CommandResult cmd_f(const CommandConfig& c) {
  const int n = need(c.n, "n", c.command);
  const long a = need(c.a, "a", c.command);
  const FResult r = compute_f(n, a, c.budget);
  CommandResult out;
  if (!witness_ok(r.witness, r.value, static_cast<std::size_t>(a))) {
    out.exit_code = kViolation;
    out.err = "witness failed re-validation\n";
  } else if (!r.proven_optimal) {
    out.exit_code = kBudgetExhausted;
    out.err = "budget exhausted; value is a lower bound\n";
  }
  if (c.command == "witness") {
    out.out = dump(to_json(r.witness));
    return out;
  }
  switch (c.format) {
    case Format::kJson:
      out.out = dump(to_json(r, !c.stable));
      break;
    case Format::kCsv:
      out.out = "n,a,value,proven_optimal\n" + std::to_string(n) + "," + std::to_string(a) + "," +
                std::to_string(r.value) + "," + (r.proven_optimal ? "true" : "false") + "\n";
      break;
    case Format::kText: {
      std::ostringstream os;
      os << "f(" << n << "," << a << ") " << (r.proven_optimal ? "= " : ">= ") << r.value
         << (r.proven_optimal ? " (proven optimal)" : " (budget exhausted)") << "\n";
      os << "witness (" << r.witness.size() << " sets): " << format_family(r.witness) << "\n";
      if (!c.stable) os << "nodes: " << r.stats.nodes << ", seconds: " << r.stats.seconds << "\n";
      out.out = os.str();
      break;
    }
  }
  return out;
}

CommandResult cmd_g(const CommandConfig& c) {
  const int n = need(c.n, "n", c.command);
  const std::size_t m = need(c.m, "m", c.command);
  const GResult r = compute_g(n, m, c.budget);
  CommandResult out;
  if (!witness_ok(r.witness, m, std::nullopt) || max_frequency(r.witness).count != r.value) {
    out.exit_code = kViolation;
    out.err = "witness failed re-validation\n";
  } else if (!r.proven_optimal) {
    out.exit_code = kBudgetExhausted;
    out.err = "budget exhausted; value is an upper bound\n";
  }
  switch (c.format) {
    case Format::kJson:
      out.out = dump(to_json(r, !c.stable));
      break;
    case Format::kCsv:
      out.out = "n,m,value,proven_optimal\n" + std::to_string(n) + "," + std::to_string(m) + "," +
                std::to_string(r.value) + "," + (r.proven_optimal ? "true" : "false") + "\n";
      break;
    case Format::kText: {
      std::ostringstream os;
      os << "g(" << n << "," << m << ") " << (r.proven_optimal ? "= " : "<= ") << r.value
         << (r.proven_optimal ? " (proven optimal)" : " (budget exhausted)") << "\n";
      os << "witness: " << format_family(r.witness) << "\n";
      if (!c.stable) os << "nodes: " << r.stats.nodes << ", seconds: " << r.stats.seconds << "\n";
      out.out = os.str();
      break;
    }
  }
  return out;
}

CommandResult cmd_lp(const CommandConfig& c) {
  const int n = need(c.n, "n", c.command);
  const long a = need(c.a, "a", c.command);
  const LpProblem p = build_relaxation(n, a);
  const LpSolution s = solve_exact(p, c.budget);
  CommandResult out;
  if (s.status == LpStatus::kOptimal) {
    if (check_primal_feasible(p, s.primal) != s.objective || verify_dual_bound(p, s.dual) != s.objective) {
      out.exit_code = kViolation;
      out.err = "solution failed the exact duality check\n";
    }
  } else if (s.status == LpStatus::kBudget) {
    out.exit_code = kBudgetExhausted;
    out.err = "budget exhausted; objective is an upper bound\n";
  } else {
    out.exit_code = kViolation;
    out.err = std::string("relaxation reported ") + to_string(s.status) + "\n";
  }
  switch (c.format) {
    case Format::kJson: {
      json j = to_json(p, s);
      if (!c.stable) j["seconds"] = s.seconds;
      out.out = dump(j);
      break;
    }
    case Format::kCsv:
      out.out = "n,a,status,floor,exact\n" + std::to_string(n) + "," + std::to_string(a) + "," + to_string(s.status) +
                "," + floor(s.objective).get_str() + "," + to_string(s.objective) + "\n";
      break;
    case Format::kText: {
      std::ostringstream os;
      os << "f_r(" << n << "," << a << ") " << (s.status == LpStatus::kOptimal ? "= " : "<= ")
         << floor(s.objective).get_str() << " floored (exact " << to_string(s.objective) << "), status "
         << to_string(s.status) << ", " << s.pivots << " pivots, " << p.rows.size() << " rows\n";
      out.out = os.str();
      break;
    }
  }
  return out;
}

CommandResult cmd_bound(const CommandConfig& c) {
  const long a = need(c.a, "a", c.command);
  const Rational v = c.n ? bar_f(*c.n, a) : bar_f_diag(a);
  const std::string fl = floor(v).get_str();
  CommandResult out;
  switch (c.format) {
    case Format::kJson: {
      json j = {{"a", a}, {"floor", fl}, {"exact", to_string(v)}};
      if (c.n) j["n"] = *c.n;
      out.out = dump(j);
      break;
    }
    case Format::kCsv:
      out.out = c.n ? "n,a,value\n" + std::to_string(*c.n) + "," + std::to_string(a) + "," + fl + "\n"
                    : "a,value\n" + std::to_string(a) + "," + fl + "\n";
      break;
    case Format::kText:
      out.out = fl + " (exact " + to_string(v) + ")\n";
      break;
  }
  return out;
}

CommandResult cmd_certify(const CommandConfig& c) {
  const int n = need(c.n, "n", c.command);
  const DualCertificate cert = make_certificate(n);
  const CertificateReport report = verify_certificate(cert);
  CommandResult out;
  json j = {{"n", n},
            {"alpha", to_string(cert.alpha)},
            {"beta", to_string(cert.beta)},
            {"gamma", to_string(cert.gamma)},
            {"valid_bound", n >= 7 && report.all_passed()}};
  json coeffs = json::array();
  for (const auto& q : cert.coefficients) coeffs.push_back(to_string(q));
  j["coefficients"] = coeffs;
  json checks = json::array();
  for (const auto& ch : report.checks) {
    checks.push_back({{"check", ch.name}, {"passed", ch.passed}, {"slack", to_string(ch.slack)}});
  }
  j["checks"] = checks;
  if (n >= 7 && !report.all_passed()) out.exit_code = kViolation;

  if (c.a) {
    const LpProblem p = build_relaxation(n, *c.a);
    const DualVector y = certificate_to_dual(cert, p);
    const Rational value = verify_dual_bound(p, y);
    const Rational expected = bar_f(n, *c.a);
    j["dual_bound"] = {{"a", *c.a}, {"value", to_string(value)}, {"bar_f", to_string(expected)},
                       {"floor", floor(value).get_str()}, {"agrees", value == expected}};
    if (value != expected) out.exit_code = kViolation;
  }

  switch (c.format) {
    case Format::kJson:
      out.out = dump(j);
      break;
    case Format::kCsv: {
      std::ostringstream os;
      os << "check,passed,slack\n";
      for (const auto& ch : report.checks) os << ch.name << ',' << (ch.passed ? "true" : "false") << ',' << to_string(ch.slack) << '\n';
      out.out = os.str();
      break;
    }
    case Format::kText: {
      std::ostringstream os;
      os << "n=" << n << " alpha=" << to_string(cert.alpha) << " beta=" << to_string(cert.beta)
         << " gamma=" << to_string(cert.gamma) << "\n";
      for (const auto& ch : report.checks) {
        os << "  " << (ch.passed ? "ok  " : "FAIL") << ' ' << ch.name << " slack " << to_string(ch.slack) << "\n";
      }
      if (n < 7) os << "gamma < 0: the combination is not a valid dual for n < 7\n";
      if (c.a) {
        os << "dual bound at a=" << *c.a << ": " << j["dual_bound"]["value"].get<std::string>() << " (bar_f "
           << j["dual_bound"]["bar_f"].get<std::string>() << ")\n";
      }
      out.out = os.str();
      break;
    }
  }
  return out;
}

CommandResult cmd_verify(const CommandConfig& c) {
  const auto reports = run_claim(c.claim, c.n, c.budget);
  CommandResult out;
  json arr = json::array();
  std::ostringstream os;
  if (c.format == Format::kCsv) os << "claim,scope,status,violations\n";
  for (const auto& r : reports) {
    if (r.status == ClaimStatus::kViolated) out.exit_code = kViolation;
    arr.push_back(to_json(r));
    if (c.format == Format::kCsv) {
      os << r.claim << ",\"" << r.scope << "\"," << to_string(r.status) << ',' << r.violations.size() << '\n';
    } else {
      os << r.claim << " [" << r.scope << "]: " << to_string(r.status) << ' ' << r.details.dump() << '\n';
      for (const auto& v : r.violations) os << "  violation: " << v.dump() << '\n';
    }
  }
  out.out = c.format == Format::kJson ? dump(arr) : os.str();
  return out;
}

CommandResult cmd_table(const CommandConfig& c) {
  struct Row {
    long a;
    std::string value;
    std::string exact;
  };
  std::vector<Row> rows;
  std::vector<std::string> notes;
  CommandResult out;
  if (c.what == "bound") {
    const auto table = bound_table(c.from.value_or(7), c.to.value_or(16));
    for (const auto& r : table) rows.push_back({r.a, r.floor_value.get_str(), to_string(r.exact)});
    notes = bound_table_notes(table);
  } else if (c.what == "f-aa") {
    for (long a = c.from.value_or(1); a <= c.to.value_or(4); ++a) {
      const FResult f = compute_f(static_cast<int>(a), a, c.budget);
      if (!f.proven_optimal) out.exit_code = kBudgetExhausted;
      rows.push_back({a, (f.proven_optimal ? "" : ">=") + std::to_string(f.value), ""});
    }
  } else if (c.what == "fr") {
    for (long a = c.from.value_or(1); a <= c.to.value_or(4); ++a) {
      const LpSolution s = solve_exact(build_relaxation(static_cast<int>(a), a), c.budget);
      if (s.status != LpStatus::kOptimal) out.exit_code = kBudgetExhausted;
      rows.push_back({a, (s.status == LpStatus::kOptimal ? "" : "<=") + floor(s.objective).get_str(), to_string(s.objective)});
    }
  } else {
    throw UsageError("'table' needs --what f-aa|bound|fr");
  }

  std::ostringstream os;
  switch (c.format) {
    case Format::kCsv:
      os << "a,value\n";
      for (const auto& r : rows) os << r.a << ',' << r.value << '\n';
      for (const auto& n : notes) out.err += "note: " + n + "\n";
      break;
    case Format::kJson: {
      json j = {{"table", c.what}};
      json arr = json::array();
      for (const auto& r : rows) {
        json row = {{"a", r.a}, {"value", r.value}};
        if (!r.exact.empty()) row["exact"] = r.exact;
        arr.push_back(row);
      }
      j["rows"] = arr;
      j["notes"] = notes;
      os << dump(j);
      break;
    }
    case Format::kText:
      os << std::setw(4) << "a" << " | value\n";
      for (const auto& r : rows) {
        os << std::setw(4) << r.a << " | " << r.value;
        if (!r.exact.empty()) os << "  (exact " << r.exact << ")";
        os << '\n';
      }
      for (const auto& n : notes) os << "note: " << n << '\n';
      break;
  }
  out.out = os.str();
  return out;
}

CommandResult cmd_check_paper(const CommandConfig& c) {
  AcceptanceOptions options;
  options.stretch = c.stretch;
  CommandResult out;
  std::ostringstream os;
  for (const auto& r : run_acceptance(options)) {
    os << format_criterion(r) << '\n';
    if (!r.passed && !r.stretch) out.exit_code = kViolation;
  }
  out.out = os.str();
  return out;
}

}  // namespace

CommandResult run(const CommandConfig& config) {
  try {
    const auto& cmd = config.command;
    if (cmd == "f" || cmd == "witness") return cmd_f(config);
    if (cmd == "g") return cmd_g(config);
    if (cmd == "lp") return cmd_lp(config);
    if (cmd == "bound") return cmd_bound(config);
    if (cmd == "certify") return cmd_certify(config);
    if (cmd == "verify") return cmd_verify(config);
    if (cmd == "table") return cmd_table(config);
    if (cmd == "check-paper") return cmd_check_paper(config);
    throw UsageError("unknown command '" + cmd + "'");
  } catch (const DualInfeasible& e) {
    return {kViolation, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kBadArguments, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace frankl::cli
