// rado: command-line front end for Rado number computations.
//
// Exit codes: 0 success (exact, colorable, valid), 1 negative verdict
// (uncolorable, invalid certificate), 2 input error or malformed input,
// 3 budget or cap reached (lower bound, budget exhausted).

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rado/certificate.hpp"
#include "rado/cnf.hpp"
#include "rado/enumerate.hpp"
#include "rado/equation.hpp"
#include "rado/solver.hpp"
#include "rado/table.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw InputError("cannot write " + path);
}

// Every certificate the tool writes must pass verify.
void write_verified(const std::string& path, const rado::Certificate& cert) {
  const auto check = rado::verify(cert);
  if (check.status != rado::VerifyResult::Status::Valid) {
    throw InputError("refusing to write a certificate that fails verification: " + check.reason);
  }
  write_file(path, rado::write_certificate(cert));
}

std::chrono::milliseconds seconds_to_ms(double s) {
  if (!(s > 0)) throw InputError("timeout must be positive");
  return std::chrono::milliseconds(static_cast<std::int64_t>(std::llround(s * 1000.0)));
}

json stats_json(const rado::SearchStats& s, bool timings) {
  json j{{"nodes", s.nodes}, {"propagations", s.propagations}, {"max_depth", s.max_depth}};
  if (timings) j["elapsed_ms"] = s.elapsed_ms;
  return j;
}

void print_stats(const rado::SearchStats& s) {
  std::cout << "nodes " << s.nodes << "\npropagations " << s.propagations << "\nmax_depth "
            << s.max_depth << "\nelapsed_ms " << static_cast<long long>(std::llround(s.elapsed_ms))
            << "\n";
}

std::string join_colors(const rado::Coloring& c) {
  std::string out;
  for (std::size_t i = 0; i < c.colors.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(c.colors[i]);
  }
  return out;
}

struct Common {
  bool json = false;
  bool timings = false;
};

struct SearchFlags {
  double timeout_s = 600.0;
  std::string backend = "auto";
  std::uint64_t node_limit = 0;
  double edge_cap = 1e6;

  rado::SearchParams params() const {
    rado::SearchParams p;
    p.time_budget = seconds_to_ms(timeout_s);
    p.backend = rado::parse_backend(backend);
    p.node_limit = node_limit;
    p.edge_cap = edge_cap;
    return p;
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--timeout", timeout_s, "Time budget in seconds")->capture_default_str();
    cmd->add_option("--backend", backend, "edge, dp or auto")->capture_default_str();
    cmd->add_option("--node-limit", node_limit, "Decision node limit per search (0 = none)");
    cmd->add_option("--edge-cap", edge_cap, "Projected edge count above which dp is used")
        ->capture_default_str();
  }
};

int cmd_solutions(const std::string& eq_text, std::int64_t max_n, bool edges_only,
                  const Common& common) {
  const auto eq = rado::parse_equation(eq_text);
  if (max_n < 1) throw InputError("--max must be at least 1");
  if (edges_only) {
    const auto edges = rado::build_hyperedges(eq, max_n, true);
    if (common.json) {
      auto j = json::parse(rado::edges_to_json(eq, edges));
      j["command"] = "solutions";
      std::cout << j.dump() << "\n";
    } else {
      for (const auto& e : edges.to_vectors()) {
        std::cout << '{';
        for (std::size_t i = 0; i < e.size(); ++i) std::cout << (i ? "," : "") << e[i];
        std::cout << "}\n";
      }
    }
    return kExitOk;
  }
  const auto sols = rado::enumerate_solutions(eq, max_n);
  if (common.json) {
    json vars = json::array();
    for (const auto& t : eq.terms()) vars.push_back(t.variable);
    json list = json::array();
    for (const auto& s : sols) list.push_back(s.values);
    std::cout << json{{"command", "solutions"}, {"equation", eq.to_string()}, {"n", max_n},
                      {"variables", vars}, {"solutions", list}}
                     .dump()
              << "\n";
  } else {
    for (const auto& s : sols) std::cout << rado::render_solution(eq, s) << "\n";
  }
  return kExitOk;
}

int cmd_rado(const std::string& eq_text, int r, std::int64_t cap, const SearchFlags& flags,
             const std::string& cert_path, const Common& common) {
  const auto eq = rado::parse_equation(eq_text);
  auto params = flags.params();
  params.n_cap = cap;
  const auto outcome = rado::compute_rado(eq, r, params);
  const bool exact = outcome.kind == rado::RadoOutcome::Kind::Exact;
  const std::string kind = exact ? "exact" : "lower-bound";

  if (!cert_path.empty()) {
    const std::string claim = exact ? "rado-exact " + std::to_string(outcome.value) : "colorable";
    write_verified(cert_path, rado::make_certificate(eq, outcome.witness, claim));
  }
  std::uint64_t searched = 0;
  for (const auto& rec : outcome.history) searched += rec.warm_start ? 0 : 1;
  if (common.json) {
    json j{{"command", "rado"},
           {"equation", eq.to_string()},
           {"r", r},
           {"result", kind},
           {"value", outcome.value},
           {"witness_n", outcome.witness.n()},
           {"backend", rado::to_string(outcome.backend)},
           {"bounds_tested", outcome.history.size()},
           {"full_searches", searched},
           {"stats", stats_json(outcome.total, common.timings)}};
    if (!cert_path.empty()) j["certificate"] = cert_path;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << kind << " " << outcome.value << "\n";
    std::cout << "equation " << eq.to_string() << "\nr " << r << "\nbackend "
              << rado::to_string(outcome.backend) << "\nfull_searches " << searched << "\n";
    print_stats(outcome.total);
  }
  return exact ? kExitOk : kExitBudget;
}

int cmd_color(const std::string& eq_text, std::int64_t n, int r, const SearchFlags& flags,
              const std::string& cert_path, const Common& common) {
  const auto eq = rado::parse_equation(eq_text);
  const auto outcome = rado::find_coloring(eq, n, r, flags.params());
  if (!cert_path.empty() && outcome.coloring) {
    write_verified(cert_path, rado::make_certificate(eq, *outcome.coloring, "colorable"));
  }
  const std::string verdict = rado::to_string(outcome.verdict);
  if (common.json) {
    json j{{"command", "color"},
           {"equation", eq.to_string()},
           {"n", n},
           {"r", r},
           {"verdict", verdict},
           {"backend", rado::to_string(outcome.backend)},
           {"stats", stats_json(outcome.stats, common.timings)}};
    if (outcome.coloring) j["coloring"] = outcome.coloring->colors;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << verdict << "\n";
    if (outcome.coloring) std::cout << "coloring " << join_colors(*outcome.coloring) << "\n";
    print_stats(outcome.stats);
  }
  switch (outcome.verdict) {
    case rado::Verdict::Colorable: return kExitOk;
    case rado::Verdict::Uncolorable: return kExitNegative;
    case rado::Verdict::BudgetExhausted: return kExitBudget;
  }
  return kExitBudget;
}

int cmd_export(const std::string& eq_text, std::int64_t n, int r, const std::string& out_path,
               bool direct, const Common& common) {
  const auto eq = rado::parse_equation(eq_text);
  const auto edges = rado::build_hyperedges(eq, n, true);
  const auto encoding = direct ? rado::Encoding::Direct : rado::default_encoding(r);
  const auto cnf = rado::export_cnf(edges, r, encoding, eq.to_string());
  write_file(out_path, rado::write_dimacs(cnf));
  if (out_path == "-") return kExitOk;
  if (common.json) {
    std::cout << json{{"command", "export"},
                      {"equation", eq.to_string()},
                      {"n", n},
                      {"r", r},
                      {"encoding", rado::to_string(encoding)},
                      {"edges", edges.size()},
                      {"variables", cnf.variable_count()},
                      {"clauses", cnf.clause_count()},
                      {"file", out_path}}
                     .dump()
              << "\n";
  } else {
    std::cout << "edges " << edges.size() << "\nvariables " << cnf.variable_count()
              << "\nclauses " << cnf.clause_count() << "\nencoding " << rado::to_string(encoding)
              << "\nwrote " << out_path << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& path, const Common& common) {
  std::string text;
  rado::VerifyResult result;
  try {
    text = read_file(path);
    result = rado::verify_text(text);
  } catch (const InputError& e) {
    result.reason = e.what();
  }
  const std::string status = rado::to_string(result.status);
  if (common.json) {
    json j{{"command", "verify"}, {"file", path}, {"status", status}};
    if (!result.reason.empty()) {
      j[result.status == rado::VerifyResult::Status::Invalid ? "violation" : "reason"] = result.reason;
    }
    std::cout << j.dump() << "\n";
  } else if (result.status == rado::VerifyResult::Status::Valid) {
    std::cout << "valid\n";
  } else {
    std::cout << status << ": " << result.reason << "\n";
  }
  switch (result.status) {
    case rado::VerifyResult::Status::Valid: return kExitOk;
    case rado::VerifyResult::Status::Invalid: return kExitNegative;
    case rado::VerifyResult::Status::Malformed: return kExitInput;
  }
  return kExitInput;
}

int cmd_model_to_cert(const std::string& cnf_path, const std::string& model_path,
                      const std::string& out_path, const Common& common) {
  const auto meta = rado::read_cnf_meta(read_file(cnf_path));
  const auto model = rado::parse_model(read_file(model_path));
  const auto eq = rado::parse_equation(meta.equation);
  const auto edges = rado::build_hyperedges(eq, meta.n, true);
  const auto coloring = rado::import_model(model, meta, &edges);
  write_verified(out_path, rado::make_certificate(eq, coloring, "colorable"));
  if (out_path == "-") return kExitOk;
  if (common.json) {
    std::cout << json{{"command", "model-to-cert"}, {"equation", eq.to_string()},
                      {"n", meta.n}, {"r", meta.r}, {"file", out_path}}
                     .dump()
              << "\n";
  } else {
    std::cout << "wrote " << out_path << "\n";
  }
  return kExitOk;
}

int cmd_table(int min_k, int max_k, int r, int jobs, double timeout_per_k, std::int64_t cap,
              const std::string& backend, const Common& common) {
  rado::TableOptions opts;
  opts.min_k = min_k;
  opts.max_k = max_k;
  opts.r = r;
  opts.jobs = jobs;
  opts.params.time_budget = seconds_to_ms(timeout_per_k);
  opts.params.n_cap = cap;
  opts.params.backend = rado::parse_backend(backend);
  if (min_k < 2 || max_k < min_k) throw InputError("table range must satisfy 2 <= min-k <= max-k");
  const auto rows = rado::run_table(opts);
  bool all_exact = true;
  for (const auto& row : rows) all_exact &= row.kind == rado::RadoOutcome::Kind::Exact;
  if (common.json) {
    json list = json::array();
    for (const auto& row : rows) {
      json j{{"k", row.k},
             {"result", row.kind == rado::RadoOutcome::Kind::Exact ? "exact" : "lower-bound"},
             {"value", row.value},
             {"backend", rado::to_string(row.backend)},
             {"nodes", row.nodes}};
      if (common.timings) j["elapsed_ms"] = row.elapsed_ms;
      list.push_back(j);
    }
    std::cout << json{{"command", "table"}, {"r", r}, {"rows", list}}.dump() << "\n";
  } else {
    std::cout << rado::format_table(rows, common.timings);
  }
  return all_exact ? kExitOk : kExitBudget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rado numbers of Diophantine equations by exhaustive coloring search"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "Machine-readable output")->configurable();
  app.add_flag("--timings", common.timings, "Include wall-clock timings in the output");

  std::string eq_text, file, model_file, out_path, cert_path;
  std::int64_t n = 0, cap = 10'000, sol_max = 100;
  int r = 2;
  bool edges_only = false, direct = false;
  SearchFlags flags;

  auto* sols = app.add_subcommand("solutions", "List solutions or hyperedges in [1, N]");
  sols->add_option("equation", eq_text, "Equation, e.g. \"x^2+y^2=z^2\"")->required();
  sols->add_option("--max", sol_max, "Bound N")->capture_default_str();
  sols->add_flag("--edges", edges_only, "Print deduplicated, minimized hyperedges");

  auto* rado_cmd = app.add_subcommand("rado", "Compute the r-color Rado number");
  rado_cmd->add_option("equation", eq_text)->required();
  rado_cmd->add_option("-r,--colors", r, "Number of colors")->capture_default_str();
  rado_cmd->add_option("--cap", cap, "Largest N to test")->capture_default_str();
  rado_cmd->add_option("--cert", cert_path, "Write the witness certificate here");
  flags.attach(rado_cmd);

  auto* color = app.add_subcommand("color", "Search for a valid coloring of [1, N]");
  color->add_option("equation", eq_text)->required();
  color->add_option("-n", n, "Bound N")->required();
  color->add_option("-r,--colors", r, "Number of colors")->capture_default_str();
  color->add_option("--cert", cert_path, "Write the coloring certificate here");
  flags.attach(color);

  auto* exp = app.add_subcommand("export", "Write the coloring instance as DIMACS CNF");
  exp->add_option("equation", eq_text)->required();
  exp->add_option("-n", n, "Bound N")->required();
  exp->add_option("-r,--colors", r, "Number of colors")->capture_default_str();
  exp->add_option("-o,--output", out_path, "Output file, - for stdout")->required();
  exp->add_flag("--direct", direct, "Use the direct encoding even for 2 colors");

  auto* ver = app.add_subcommand("verify", "Verify a coloring certificate");
  ver->add_option("file", file, "Certificate file")->required();

  auto* m2c = app.add_subcommand("model-to-cert", "Turn a SAT model into a certificate");
  m2c->add_option("cnf", file, "CNF file written by export")->required();
  m2c->add_option("model", model_file, "Solver output")->required();
  m2c->add_option("-o,--output", out_path, "Certificate file, - for stdout")->required();

  int min_k = 3, max_k = 17, jobs = 1;
  double timeout_per_k = 600.0;
  std::string table_backend = "auto";
  auto* table = app.add_subcommand("table", "Rado numbers of x1^2+...+xk^2=z^2 over a range of k");
  table->add_option("--min-k", min_k, "Smallest number of squares k")->capture_default_str();
  table->add_option("--max-k", max_k, "Largest number of squares k")->capture_default_str();
  table->add_option("-r,--colors", r, "Number of colors")->capture_default_str();
  table->add_option("--jobs", jobs, "Parallel computations")->capture_default_str();
  table->add_option("--timeout-per-k", timeout_per_k, "Seconds per k")->capture_default_str();
  table->add_option("--cap", cap, "Largest N to test per k")->capture_default_str();
  table->add_option("--backend", table_backend, "edge, dp or auto")->capture_default_str();

  for (auto* sub : {sols, rado_cmd, color, exp, ver, m2c, table}) {
    sub->add_flag("--json", common.json, "Machine-readable output");
    sub->add_flag("--timings", common.timings, "Include wall-clock timings");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*sols) return cmd_solutions(eq_text, sol_max, edges_only, common);
    if (*rado_cmd) return cmd_rado(eq_text, r, cap, flags, cert_path, common);
    if (*color) return cmd_color(eq_text, n, r, flags, cert_path, common);
    if (*exp) return cmd_export(eq_text, n, r, out_path, direct, common);
    if (*ver) return cmd_verify(file, common);
    if (*m2c) return cmd_model_to_cert(file, model_file, out_path, common);
    if (*table) {
      return cmd_table(min_k, max_k, r, jobs, timeout_per_k, cap, table_backend, common);
    }
  } catch (const std::exception& e) {
    // rado::Error, InputError and I/O failures all count as input errors
    std::cerr << "error: " << e.what() << "\n";
    if (common.json) {
      std::cout << json{{"command", app.get_subcommands().front()->get_name()}, {"error", e.what()}}.dump()
                << "\n";
    }
    return kExitInput;
  }
  return kExitInput;
}
