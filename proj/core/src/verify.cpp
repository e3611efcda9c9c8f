#include "revcount/verify.hpp"

#include "revcount/metrics.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

namespace revcount {

bool VerificationReport::all_passed() const
{
  return std::all_of(checks.begin(), checks.end(), [](auto const& c) { return c.passed; });
}

void VerificationReport::add(std::string name, bool passed, std::string detail)
{
  checks.push_back({std::move(name), passed, std::move(detail)});
}

namespace {

std::string bit_string(Bits const& bits)
{
  std::string s;
  for (auto b : bits) {
    s.push_back(b ? '1' : '0');
  }
  return s;
}

// Line values for free-input assignment `a` (bit j of `a` drives free line j).
void load_assignment(Netlist const& netlist, std::vector<std::size_t> const& free, std::uint64_t a, Bits& lines)
{
  for (std::size_t i = 0; i < netlist.line_count(); ++i) {
    auto const& in = netlist.input(i);
    lines[i] = in && in->is_constant() ? in->value : 0;
  }
  for (std::size_t j = 0; j < free.size(); ++j) {
    lines[free[j]] = (a >> j) & 1u;
  }
}

std::vector<std::uint64_t> pack_lines(Bits const& lines)
{
  std::vector<std::uint64_t> words((lines.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    words[i / 64] |= static_cast<std::uint64_t>(lines[i] & 1u) << (i % 64);
  }
  return words;
}

double max_abs_diff(Eigen::MatrixXcd const& a, Eigen::MatrixXcd const& b)
{
  return (a - b).cwiseAbs().maxCoeff();
}

std::string format_double(double v)
{
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

} // namespace

VerificationReport check_reversible(Netlist const& netlist, std::size_t max_free)
{
  auto const free = netlist.free_lines();
  if (free.size() > max_free || free.size() >= 64) {
    throw BoundExceeded("exhaustive reversibility check refused: " + std::to_string(free.size()) +
                        " free inputs exceed the bound of " + std::to_string(max_free));
  }

  VerificationReport report;
  report.subject = "reversibility";
  auto const total = std::uint64_t{1} << free.size();
  Bits lines(netlist.line_count());

  std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> images;
  images.reserve(total);
  for (std::uint64_t a = 0; a < total; ++a) {
    load_assignment(netlist, free, a, lines);
    apply_gates(netlist, lines, 0, netlist.gates().size());
    images.emplace_back(pack_lines(lines), a);
  }
  std::sort(images.begin(), images.end());
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (images[i].first == images[i - 1].first) {
      std::ostringstream detail;
      detail << "free-input assignments " << images[i - 1].second << " and " << images[i].second
             << " produce the same outputs";
      report.add("injective over " + std::to_string(free.size()) + " free inputs", false, detail.str());
      return report;
    }
  }
  report.add("injective over " + std::to_string(free.size()) + " free inputs", true,
             std::to_string(total) + " assignments, all images distinct");
  return report;
}

VerificationReport check_equivalent(Netlist const& netlist, TruthReference const& reference)
{
  auto const free = netlist.free_lines();
  std::set<std::string> netlist_names;
  for (auto l : free) {
    netlist_names.insert(netlist.input(l) ? netlist.input(l)->name : std::string{});
  }
  std::set<std::string> const reference_names(reference.inputs.begin(), reference.inputs.end());
  if (netlist_names != reference_names || reference_names.size() != reference.inputs.size()) {
    throw std::invalid_argument("reference inputs do not match the netlist's free inputs");
  }
  if (free.size() > max_exhaustive_inputs) {
    throw BoundExceeded("equivalence check refused: too many free inputs");
  }
  for (auto l : reference.outputs) {
    if (l >= netlist.line_count()) {
      throw std::invalid_argument("reference output line out of range");
    }
  }

  std::vector<std::size_t> order; // reference input k -> line
  for (auto const& name : reference.inputs) {
    order.push_back(*netlist.find_input(name));
  }

  VerificationReport report;
  report.subject = "equivalence";
  auto const name = reference.description.empty() ? std::string("matches reference") : reference.description;
  Bits lines(netlist.line_count());
  Bits args(order.size());
  auto const total = std::uint64_t{1} << free.size();
  for (std::uint64_t a = 0; a < total; ++a) {
    load_assignment(netlist, free, a, lines);
    for (std::size_t k = 0; k < order.size(); ++k) {
      args[k] = lines[order[k]];
    }
    apply_gates(netlist, lines, 0, netlist.gates().size());
    auto const expected = reference.fn(args);
    Bits actual;
    for (auto l : reference.outputs) {
      actual.push_back(lines[l]);
    }
    if (actual != expected) {
      std::ostringstream detail;
      detail << "inputs (";
      for (std::size_t k = 0; k < order.size(); ++k) {
        detail << (k ? " " : "") << reference.inputs[k] << "=" << int(args[k]);
      }
      detail << ") give " << bit_string(actual) << ", expected " << bit_string(expected);
      report.add(name, false, detail.str());
      return report;
    }
  }
  report.add(name, true, std::to_string(total) + " assignments");
  return report;
}

VerificationReport check_theorems(std::size_t max_bits)
{
  if (max_bits < 4) {
    throw std::invalid_argument("theorem sweep needs max_bits >= 4");
  }
  VerificationReport report;
  report.subject = "counter cost formulas, n <= " + std::to_string(max_bits);
  for (auto mode : {CounterMode::Async, CounterMode::Sync}) {
    std::size_t const first = mode == CounterMode::Async ? 1 : 3;
    for (auto n = first; n <= max_bits; ++n) {
      CounterSpec const spec{n, mode};
      auto const measured = measure(flatten(build_counter(spec)));
      auto const predicted = predict_cost(spec);
      bool const ok = predicted.applicable && measured.gate_count == predicted.gates &&
                      measured.garbage_outputs == predicted.garbage && measured.quantum_cost == predicted.quantum &&
                      measured.delay == measured.quantum_cost;
      std::ostringstream detail;
      detail << "measured gates " << measured.gate_count << " garbage " << measured.garbage_outputs << " qc "
             << measured.quantum_cost << " delay " << measured.delay << "; predicted gates " << predicted.gates
             << " garbage " << predicted.garbage << " qc " << predicted.quantum;
      report.add(std::string(to_string(mode)) + " n=" + std::to_string(n), ok, detail.str());
    }
  }
  return report;
}

VerificationReport check_counting(SequentialCircuit const& circuit, std::size_t pulses, std::string subject)
{
  if (pulses < 1) {
    throw std::invalid_argument("counting check needs at least one pulse");
  }
  auto const n = circuit.stages().size();
  if (n == 0 || n >= 64) {
    throw std::invalid_argument("counting check needs 1..63 stages");
  }
  VerificationReport report;
  report.subject = std::move(subject);
  auto const states = run(circuit, pulses);
  auto const modulus = std::uint64_t{1} << n;
  for (std::size_t t = 0; t < states.size(); ++t) {
    auto const q = q_bits(circuit, states[t]);
    auto const value = pack_lines(q).front();
    if (value != t % modulus) {
      std::ostringstream detail;
      detail << "after " << t << " pulses the state reads " << format_state(circuit, states[t]) << " (" << value
             << "), expected " << (t % modulus);
      report.add("counts mod " + std::to_string(modulus), false, detail.str());
      return report;
    }
  }
  report.add("counts mod " + std::to_string(modulus), true, std::to_string(pulses) + " pulses");
  return report;
}

VerificationReport check_counting(CounterSpec const& spec, std::size_t pulses)
{
  return check_counting(build_counter(spec), pulses,
                        std::string(to_string(spec.mode)) + " " + std::to_string(spec.bits) + "-bit counter");
}

VerificationReport check_decompositions()
{
  VerificationReport report;
  report.subject = "builtin gates";

  auto const v = sqrt_not();
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  auto const v_err = std::max(max_abs_diff(v * v, x), max_abs_diff(v * v.adjoint(), Eigen::Matrix2cd::Identity()));
  report.add("V*V = X, V*V+ = I", v_err <= unitary_tolerance, "max error " + format_double(v_err));

  for (auto const& g : builtin_gates()) {
    auto const size = std::uint32_t{1} << g.arity();
    std::set<std::uint32_t> images;
    for (std::uint32_t a = 0; a < size; ++a) {
      images.insert(pack_pattern(apply_gate(g, unpack_pattern(a, g.arity()))));
    }
    bool const bijective = images.size() == size;

    auto const u = decomposition_unitary(g);
    auto const identity = Eigen::MatrixXcd::Identity(size, size);
    auto const err = std::max(max_abs_diff(u, permutation_matrix(g)), max_abs_diff(u * u.adjoint(), identity));
    bool const length_ok = g.decomposition().size() == g.quantum_cost();

    std::ostringstream detail;
    detail << (bijective ? "bijective" : "NOT bijective") << ", length " << g.decomposition().size() << " cost "
           << g.quantum_cost() << ", max error " << format_double(err);
    report.add(g.name(), bijective && length_ok && err <= unitary_tolerance, detail.str());
  }

  auto const& pg = gate("PG");
  auto const& mpg = gate("MPG");
  bool complement = true;
  for (std::uint32_t a = 0; a < 8; ++a) {
    complement = complement && mpg.map(a) == (pg.map(a) ^ 1u);
  }
  report.add("MPG = PG with first output complemented", complement, "8 inputs");
  return report;
}

std::string to_text(VerificationReport const& report, bool color)
{
  auto const tag = [&](bool ok) -> std::string {
    if (!color) {
      return ok ? "[PASS]" : "[FAIL]";
    }
    return ok ? "\x1b[32m[PASS]\x1b[0m" : "\x1b[31m[FAIL]\x1b[0m";
  };
  std::ostringstream os;
  os << report.subject << '\n';
  std::size_t passed = 0;
  for (auto const& c : report.checks) {
    passed += c.passed;
    os << "  " << tag(c.passed) << ' ' << c.name;
    if (!c.detail.empty()) {
      os << ": " << c.detail;
    }
    os << '\n';
  }
  os << (report.all_passed() ? "all checks passed" : "some checks failed") << " (" << passed << "/"
     << report.checks.size() << ")\n";
  return os.str();
}

std::string to_json(VerificationReport const& report)
{
  nlohmann::ordered_json j;
  j["subject"] = report.subject;
  j["all_passed"] = report.all_passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (auto const& c : report.checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return j.dump(2);
}

} // namespace revcount
