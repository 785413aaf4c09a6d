#include "cli_app.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "f2orbit/classify.hpp"
#include "f2orbit/errors.hpp"
#include "f2orbit/export.hpp"
#include "f2orbit/lattice.hpp"
#include "f2orbit/orbits.hpp"
#include "f2orbit/tri.hpp"

namespace f2orbit::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string seconds_since(Clock::time_point start) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << std::chrono::duration<double>(Clock::now() - start).count();
  return s.str();
}

ActionKind action_of(const JobConfig& c) {
  auto kind = parse_action_kind(c.action);
  if (!kind) throw std::invalid_argument("unknown action '" + c.action + "'");
  return *kind;
}

std::string render(const OrbitCensus& census, const std::string& format) {
  if (format == "json") return census_to_json(census);
  if (format == "csv") return census_to_csv(census);
  return census_to_table(census);
}

// Writes `text` to --out when given, else to `out`.
void emit(const JobConfig& c, const std::string& text, std::ostream& out) {
  if (!c.out) {
    out << text;
    return;
  }
  std::ofstream file(*c.out, std::ios::binary);
  if (!file) throw ParseError("cannot write '" + *c.out + "'");
  file << text;
}

void summary(std::ostream& out, const OrbitCensus& census, Clock::time_point start) {
  out << "orbits=" << census.orbit_count() << " states=" << census.total_states << " elapsed=" << seconds_since(start)
      << '\n';
}

// Adds type labels when a closed form exists and fits the census.
OrbitCensus try_label(const OrbitCensus& census, int n, ActionKind kind) {
  if (n < 5 || (kind != ActionKind::First && kind != ActionKind::Second)) return census;
  const PredictedCensus pred = kind == ActionKind::First ? predict_first(n) : predict_second(n);
  std::vector<std::string> problems;
  OrbitCensus labelled = label_orbits(census, pred, &problems);
  return problems.empty() ? labelled : census;
}

int cmd_census(const JobConfig& c, std::ostream& out) {
  const auto start = Clock::now();
  const ActionKind kind = action_of(c);
  if (c.n < 1) throw std::invalid_argument("--n must be at least 1");
  const bool on_tn = kind == ActionKind::First || kind == ActionKind::FirstConjugate;
  check_enumeration_guard(TriShape(on_tn ? c.n : c.n - 1).dim());
  const ActionSpec spec(c.n, kind);
  const EnumerationOptions options{c.threads};
  OrbitCensus census = c.height ? enumerate_stratum(spec, Height::parse(*c.height), options) : enumerate(spec, options);
  if (!c.height) census = try_label(census, c.n, kind);
  emit(c, render(census, c.format), out);
  summary(out, census, start);
  return kOk;
}

int cmd_verify(const JobConfig& c, std::ostream& out) {
  const ActionKind kind = action_of(c);
  if (c.n < 1) throw std::invalid_argument("--n must be at least 1");
  const bool on_tn = kind == ActionKind::First || kind == ActionKind::FirstConjugate;
  check_enumeration_guard(TriShape(on_tn ? c.n : c.n - 1).dim());
  const VerificationReport report = verify(c.n, kind, EnumerationOptions{c.threads});
  emit(c, c.format == "json" ? report_to_json(report) : report.to_text(), out);
  if (report.mode == "observed") out << "observed orbits=" << report.census.orbit_count() << '\n';
  return report.passed() ? kOk : kDiff;
}

int cmd_graph(const JobConfig& c, std::ostream& out) {
  const auto start = Clock::now();
  if (!c.input) throw std::invalid_argument("graph requires --input <file>");
  GraphFile file = read_graph_file(*c.input);
  const LatticeSpec spec = LatticeSpec::build(std::move(file.graph), std::move(file.basis_subset));
  check_enumeration_guard(spec.dim());
  const OrbitCensus census = enumerate(spec, EnumerationOptions{c.threads});
  emit(c, render(census, c.format), out);

  int code = kOk;
  out << "kernel_dim=" << spec.qspace().kappa() << " arf=" << to_string(arf(spec.qspace())) << '\n';
  if (spec.dim() <= kMaxClosureDim) {
    const VanishingReport v = check_vanishing(spec);
    out << "vanishing_lattice=" << (v.all() ? "yes" : "no") << " (orbit=" << v.orbit_ok
        << " generates=" << v.generates_ok << " pair=" << v.pair_ok << ")\n";
  }
  try {
    const OrbitCensus predicted = predict_census_nonspecial(spec);
    const bool match = predicted.records == census.records;
    out << "prediction: " << predicted.orbit_count() << " orbits, " << (match ? "matches" : "DIFFERS")
        << " enumeration\n";
    if (!match) code = kDiff;
  } catch (const PredictionRefused& e) {
    out << "prediction: none (" << e.what() << ")\n";
  }
  summary(out, census, start);
  return code;
}

void print_pattern(std::ostream& out, const std::string& name, const TriMatrix& m) {
  out << name << ":\n" << m.to_grid();
}

int cmd_patterns(const JobConfig& c, std::ostream& out) {
  const int n = c.n;
  if (n < 2) throw std::invalid_argument("patterns requires --n >= 2");
  for (int i = 1; i <= n; ++i) print_pattern(out, "E_" + std::to_string(i), pattern_E(n, i));
  for (int i = 1; i <= n; ++i) print_pattern(out, "R_" + std::to_string(i), pattern_R(n, i));
  if (n >= 3) {
    const int k = n / 2;
    for (int i = 1; i <= k; ++i) print_pattern(out, "P_" + std::to_string(i), pattern_P(n, i));
    for (int i = 1; i <= k; ++i) print_pattern(out, "Ptilde_" + std::to_string(i), pattern_Ptilde(n, i));
    const HexGraph h = hex_graph(n);
    const PatternCertificate cert = certify_P(n);
    out << "hex graph on T^" << (n - 1) << ": vertices=" << h.vertex_count() << " edges=" << h.edge_count()
        << " kernel_dim=" << cert.kernel_dim << '\n';
    out << "P certificate: " << (cert.ok() ? "ok" : "FAILED " + cert.discrepancy) << '\n';
    if (!cert.ok()) return kDiff;
  }
  return kOk;
}

int cmd_arf(const JobConfig& c, std::ostream& out) {
  if (c.n < 3) throw std::invalid_argument("arf requires --n >= 3");
  const QuadraticSpace q = hex_space(c.n);
  const ValueCounts closed = value_counts_closed(q);
  out << "space=hex T^" << (c.n - 1) << " dim=" << q.dim() << " kernel_dim=" << q.kappa() << " m=" << q.m()
      << " arf=" << to_string(arf(q)) << '\n';
  out << "closed zeros=" << closed.zeros << " ones=" << closed.ones << '\n';
  if (q.dim() <= kMaxBruteForceDim) {
    const ValueCounts brute = value_counts_brute(q);
    out << "brute  zeros=" << brute.zeros << " ones=" << brute.ones << (brute == closed ? " (match)" : " (DIFFERS)")
        << '\n';
    if (!(brute == closed)) return kDiff;
  }
  return kOk;
}

}  // namespace

int execute(const JobConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.command == "census") return cmd_census(c, out);
    if (c.command == "verify") return cmd_verify(c, out);
    if (c.command == "graph") return cmd_graph(c, out);
    if (c.command == "patterns") return cmd_patterns(c, out);
    if (c.command == "arf") return cmd_arf(c, out);
    err << "error: unknown command '" << c.command << "'\n";
    return kUsage;
  } catch (const ResourceGuardError& e) {
    err << "refused: " << e.what() << '\n';
    return kGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbit censuses of F2 transvection-group actions", "f2orbit"};
  app.require_subcommand(1);
  JobConfig c;
  const std::vector<std::string> actions{"first", "second", "first-conj", "second-conj"};
  const std::vector<std::string> formats{"json", "csv", "table"};

  auto add_common = [&](CLI::App* sub, bool needs_action) {
    if (needs_action) sub->add_option("--action", c.action, "Action kind")->check(CLI::IsMember(actions));
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", c.out, "Write output to this file");
    sub->add_option("--threads", c.threads, "Worker count (default: all)")->check(CLI::NonNegativeNumber);
  };

  auto* census = app.add_subcommand("census", "Enumerate the orbits of an action");
  census->add_option("--n", c.n, "Order n")->required();
  census->add_option("--height", c.height, "Restrict to one stratum, e.g. 01001");
  add_common(census, true);

  auto* verify_cmd = app.add_subcommand("verify", "Compare enumeration with the closed-form census");
  verify_cmd->add_option("--n", c.n, "Order n")->required();
  add_common(verify_cmd, true);

  auto* graph = app.add_subcommand("graph", "Orbits of the transvection group of a graph file");
  graph->add_option("--input", c.input, "Graph file")->required();
  add_common(graph, false);

  auto* patterns = app.add_subcommand("patterns", "Print the invariant and dual-invariant patterns");
  patterns->add_option("--n", c.n, "Order n")->required();

  auto* arf_cmd = app.add_subcommand("arf", "Kernel, Arf class and value counts of the hex quadratic space");
  arf_cmd->add_option("--n", c.n, "Order n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
  return execute(c, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"f2orbit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace f2orbit::cli
