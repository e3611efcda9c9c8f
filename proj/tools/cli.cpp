#include "cli.hpp"

#include "revcount/generators.hpp"
#include "revcount/metrics.hpp"
#include "revcount/netlist_format.hpp"
#include "revcount/report.hpp"
#include "revcount/sequential.hpp"
#include "revcount/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace revcount::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_error = 2;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string read_file(std::string const& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template<typename Parse>
auto load_with(std::string const& path, Parse parse)
{
  auto const text = read_file(path);
  try {
    return parse(text);
  } catch (ParseError const& e) {
    throw std::runtime_error(path + ":" + e.what());
  }
}

SequentialCircuit load(std::string const& path)
{
  return load_with(path, [](std::string const& t) { return parse_circuit(t); });
}

struct SynthOptions {
  std::string kind;
  std::optional<std::size_t> bits;
  std::optional<std::string> mode;
  std::optional<std::string> out;
};

struct CostOptions {
  std::string path;
  std::string format = "text";
};

struct SimOptions {
  std::string path;
  std::size_t pulses = 0;
  bool trace = false;
  std::vector<std::string> set;
};

struct VerifyOptions {
  std::optional<std::string> path;
  bool theorems = false;
  bool exhaustive = false;
  bool gates = false;
  std::size_t max_bits = 16;
  std::string format = "text";
};

struct ReportOptions {
  bool tables = false;
  bool scaling = false;
  std::optional<std::size_t> max_bits;
  std::string format = "csv";
  std::string mode = "both";
};

int synth(SynthOptions const& o, std::ostream& out)
{
  bool const counter = o.kind == "counter";
  if (counter && (!o.bits || !o.mode)) {
    throw UsageError("--kind counter requires --bits and --mode");
  }
  if (!counter && (o.bits || o.mode)) {
    throw UsageError("--bits and --mode apply only to --kind counter");
  }

  auto const circuit = [&] {
    if (o.kind == "tff") {
      return build_t_ff();
    }
    if (o.kind == "ctff-a") {
      return build_clocked_t_ff(ClockedVariant::A);
    }
    if (o.kind == "ctff-b") {
      return build_clocked_t_ff(ClockedVariant::B);
    }
    if (o.kind == "mstff") {
      return build_ms_t_ff();
    }
    if (*o.bits < 1) {
      throw UsageError("--bits must be at least 1");
    }
    return build_counter({*o.bits, *parse_counter_mode(*o.mode)});
  }();

  if (o.out) {
    std::ofstream file(*o.out, std::ios::binary);
    if (!file) {
      throw std::runtime_error("cannot write '" + *o.out + "'");
    }
    file << serialize(circuit);
    if (!file.flush()) {
      throw std::runtime_error("cannot write '" + *o.out + "'");
    }
  }
  out << to_text(measure(flatten(circuit)));
  return exit_ok;
}

int cost(CostOptions const& o, std::ostream& out)
{
  auto const report = measure(flatten(load(o.path)));
  if (o.format == "csv") {
    out << csv_header() << '\n' << to_csv_row(report) << '\n';
  } else if (o.format == "json") {
    out << to_json(report) << '\n';
  } else {
    out << to_text(report);
  }
  return exit_ok;
}

int sim(SimOptions const& o, std::ostream& out)
{
  auto const circuit = load(o.path);
  if (circuit.feedbacks().empty() || circuit.stages().empty()) {
    throw std::runtime_error("not sequential: '" + o.path + "' has no .feedback directives");
  }
  InputAssignment inputs;
  for (auto const& s : o.set) {
    auto const eq = s.find('=');
    if (eq == std::string::npos || eq + 2 != s.size() || (s[eq + 1] != '0' && s[eq + 1] != '1')) {
      throw UsageError("--set expects NAME=0 or NAME=1, got '" + s + "'");
    }
    auto const name = s.substr(0, eq);
    auto const line = circuit.core().find_input(name);
    if (!line) {
      throw UsageError("no primary input named '" + name + "'");
    }
    inputs[name] = static_cast<std::uint8_t>(s[eq + 1] - '0');
  }

  auto state = initial_state(circuit);
  out << 0 << ' ' << format_state(circuit, state) << '\n';
  for (std::size_t t = 1; t <= o.pulses; ++t) {
    auto result = pulse_traced(circuit, state, inputs);
    state = std::move(result.state);
    if (o.trace) {
      out << "# fired:";
      for (auto s : result.fired) {
        out << ' ' << s;
      }
      out << '\n';
    }
    out << t << ' ' << format_state(circuit, state) << '\n';
  }
  return exit_ok;
}

int verify(VerifyOptions const& o, std::ostream& out, bool color)
{
  int const modes = int(o.theorems) + int(o.gates) + int(o.path.has_value());
  if (modes != 1) {
    throw UsageError("choose exactly one of --theorems, --gates or PATH --exhaustive");
  }
  if (o.path && !o.exhaustive) {
    throw UsageError("PATH requires --exhaustive");
  }
  if (!o.path && o.exhaustive) {
    throw UsageError("--exhaustive requires PATH");
  }

  VerificationReport report;
  if (o.theorems) {
    report = check_theorems(o.max_bits);
  } else if (o.gates) {
    report = check_decompositions();
  } else {
    auto const netlist = load_with(*o.path, [](std::string const& t) { return parse_netlist(t); });
    auto const violations = validate(netlist);
    auto const reversible = check_reversible(netlist);
    report.subject = *o.path;
    std::string detail;
    for (auto const& v : violations) {
      detail += (detail.empty() ? "" : "; ") + v.message;
    }
    report.add("well-formed", violations.empty(), detail);
    report.checks.insert(report.checks.end(), reversible.checks.begin(), reversible.checks.end());
  }

  out << (o.format == "json" ? to_json(report) + "\n" : to_text(report, color));
  return report.all_passed() ? exit_ok : exit_failed;
}

int report(ReportOptions const& o, std::ostream& out)
{
  if (o.tables == o.scaling) {
    throw UsageError("choose exactly one of --tables or --scaling");
  }
  if (o.tables) {
    if (o.max_bits) {
      throw UsageError("--max-bits applies only to --scaling");
    }
    out << render_tables(comparison_tables());
    return exit_ok;
  }
  if (!o.max_bits || *o.max_bits < 1) {
    throw UsageError("--scaling requires --max-bits N with N >= 1");
  }
  std::vector<CounterMode> modes;
  if (o.mode != "sync") {
    modes.push_back(CounterMode::Async);
  }
  if (o.mode != "async") {
    modes.push_back(CounterMode::Sync);
  }
  auto const rows = scaling_rows(*o.max_bits, modes);
  out << (o.format == "text" ? render_scaling_text(rows) : render_scaling_csv(rows));
  return exit_ok;
}

} // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err, bool color)
{
  CLI::App app{"Reversible counter toolkit: synthesize, measure, simulate and verify reversible T flip-flops and "
               "counters.\nStates are printed MSB-left (highest stage first); registers are stored LSB-first.",
               "rnl"};
  app.require_subcommand(1);
  app.fallthrough(false);

  SynthOptions synth_opts;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a design, print its cost and optionally write it");
  synth_cmd->add_option("--kind", synth_opts.kind, "Design kind")
    ->required()
    ->check(CLI::IsMember({"tff", "ctff-a", "ctff-b", "mstff", "counter"}));
  synth_cmd->add_option("--bits", synth_opts.bits, "Counter width (counter only)");
  synth_cmd->add_option("--mode", synth_opts.mode, "Counter clocking (counter only)")
    ->check(CLI::IsMember({"sync", "async"}));
  synth_cmd->add_option("--out", synth_opts.out, "Write the .rnl netlist to PATH");

  CostOptions cost_opts;
  auto* cost_cmd = app.add_subcommand("cost", "Print gate count, quantum cost, delay and garbage of a netlist");
  cost_cmd->add_option("path", cost_opts.path, "Netlist file")->required();
  cost_cmd->add_option("--format", cost_opts.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));

  SimOptions sim_opts;
  auto* sim_cmd = app.add_subcommand("sim", "Apply clock pulses to a sequential netlist and print the states");
  sim_cmd->add_option("path", sim_opts.path, "Sequential netlist file")->required();
  sim_cmd->add_option("--pulses", sim_opts.pulses, "Number of clock pulses")->required();
  sim_cmd->add_flag("--trace", sim_opts.trace, "Print the stages that fired on each pulse");
  sim_cmd->add_option("--set", sim_opts.set, "Drive a primary input, NAME=0|1 (default 0)");

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Run exhaustive checks; exit status 1 if any check fails");
  verify_cmd->add_option("path", verify_opts.path, "Netlist to check (with --exhaustive)");
  verify_cmd->add_flag("--theorems", verify_opts.theorems, "Sweep counter sizes against the cost formulas");
  verify_cmd->add_option("--max-bits", verify_opts.max_bits, "Largest counter width for --theorems")
    ->check(CLI::Range(4, 62));
  verify_cmd->add_flag("--exhaustive", verify_opts.exhaustive, "Exhaustive reversibility check of PATH");
  verify_cmd->add_flag("--gates", verify_opts.gates, "Check builtin gate decompositions");
  verify_cmd->add_option("--format", verify_opts.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  ReportOptions report_opts;
  auto* report_cmd = app.add_subcommand("report", "Print comparison tables or cost scaling data");
  report_cmd->add_flag("--tables", report_opts.tables, "Comparison tables I-IV");
  report_cmd->add_flag("--scaling", report_opts.scaling, "Measured vs predicted quantum cost per width");
  report_cmd->add_option("--max-bits", report_opts.max_bits, "Largest counter width for --scaling")
    ->check(CLI::Range(1, 62));
  report_cmd->add_option("--format", report_opts.format, "Scaling output format")
    ->check(CLI::IsMember({"csv", "text"}));
  report_cmd->add_option("--mode", report_opts.mode, "Counter modes for --scaling")
    ->check(CLI::IsMember({"async", "sync", "both"}));

  std::vector<char const*> argv{"rnl"};
  for (auto const& a : args) {
    argv.push_back(a.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::ParseError const& e) {
    auto const code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_error;
  }

  try {
    if (*synth_cmd) {
      return synth(synth_opts, out);
    }
    if (*cost_cmd) {
      return cost(cost_opts, out);
    }
    if (*sim_cmd) {
      return sim(sim_opts, out);
    }
    if (*verify_cmd) {
      return verify(verify_opts, out, color);
    }
    return report(report_opts, out);
  } catch (UsageError const& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
  }
  return exit_error;
}

} // namespace revcount::cli
