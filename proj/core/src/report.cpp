#include "revcount/report.hpp"

#include <array>
#include <iomanip>
#include <sstream>

namespace revcount {

namespace {

constexpr std::array clocked_baselines{
  Baseline{"Chuang", "[12]", 6, 6, 2},
  Baseline{"Thapliyal", "[14]", 6, 6, 2},
};

constexpr std::array ms_baselines{
  Baseline{"Thapliyal", "[14]", 11, 11, 3},
  Baseline{"Thapliyal", "[18]", 17, 17, 4},
};

constexpr std::array async_baselines{
  Baseline{"Rajmohan", "[17]", 55, 55, 12},
};

constexpr std::array sync_baselines{
  Baseline{"Khan", "[16]", 35, 35, 4},
};

} // namespace

std::span<const Baseline> clocked_t_ff_baselines()
{
  return clocked_baselines;
}

std::span<const Baseline> ms_t_ff_baselines()
{
  return ms_baselines;
}

std::span<const Baseline> async_counter_baselines()
{
  return async_baselines;
}

std::span<const Baseline> sync_counter_baselines()
{
  return sync_baselines;
}

std::vector<ComparisonTable> comparison_tables()
{
  return {
    {"I", "clocked T flip-flop", measure(flatten(build_clocked_t_ff(ClockedVariant::A))), clocked_baselines},
    {"II", "master-slave T flip-flop", measure(flatten(build_ms_t_ff())), ms_baselines},
    {"III", "4-bit asynchronous counter", measure(flatten(build_counter({4, CounterMode::Async}))),
     async_baselines},
    {"IV", "4-bit synchronous counter", measure(flatten(build_counter({4, CounterMode::Sync}))), sync_baselines},
  };
}

std::string render_tables(std::span<const ComparisonTable> tables)
{
  std::ostringstream os;
  auto row = [&os](std::string_view design, std::size_t qc, std::size_t delay, std::size_t garbage,
                   std::string_view source) {
    os << std::left << std::setw(18) << design << std::right << std::setw(13) << qc << std::setw(7) << delay
       << std::setw(9) << garbage << "  " << source << '\n';
  };
  bool first = true;
  for (auto const& t : tables) {
    if (!first) {
      os << '\n';
    }
    first = false;
    os << "Table " << t.id << ": " << t.title << '\n';
    os << std::left << std::setw(18) << "design" << std::right << std::setw(13) << "quantum_cost" << std::setw(7)
       << "delay" << std::setw(9) << "garbage" << "  source\n";
    row("Proposed", t.proposed.quantum_cost, t.proposed.delay, t.proposed.garbage_outputs, "measured");
    for (auto const& b : t.baselines) {
      row(std::string(b.design) + std::string(b.citation), b.quantum_cost, b.delay, b.garbage, "reference");
    }
  }
  return os.str();
}

std::vector<ScalingRow> scaling_rows(std::size_t max_bits, std::span<const CounterMode> modes)
{
  std::vector<ScalingRow> rows;
  for (auto mode : modes) {
    for (std::size_t n = 1; n <= max_bits; ++n) {
      CounterSpec const spec{n, mode};
      rows.push_back({mode, n, measure(flatten(build_counter(spec))), predict_cost(spec)});
    }
  }
  return rows;
}

std::string render_scaling_csv(std::span<const ScalingRow> rows)
{
  std::ostringstream os;
  os << "mode,n,gates,measured_qc,predicted_qc,delay,garbage\n";
  for (auto const& r : rows) {
    os << to_string(r.mode) << ',' << r.bits << ',' << r.measured.gate_count << ',' << r.measured.quantum_cost << ',';
    if (r.predicted.applicable) {
      os << r.predicted.quantum;
    } else {
      os << "NA";
    }
    os << ',' << r.measured.delay << ',' << r.measured.garbage_outputs << '\n';
  }
  return os.str();
}

std::string render_scaling_text(std::span<const ScalingRow> rows)
{
  std::ostringstream os;
  os << std::left << std::setw(6) << "mode" << std::right << std::setw(4) << "n" << std::setw(7) << "gates"
     << std::setw(13) << "measured_qc" << std::setw(14) << "predicted_qc" << std::setw(7) << "delay" << std::setw(9)
     << "garbage" << '\n';
  for (auto const& r : rows) {
    os << std::left << std::setw(6) << to_string(r.mode) << std::right << std::setw(4) << r.bits << std::setw(7)
       << r.measured.gate_count << std::setw(13) << r.measured.quantum_cost << std::setw(14)
       << (r.predicted.applicable ? std::to_string(r.predicted.quantum) : std::string("NA")) << std::setw(7)
       << r.measured.delay << std::setw(9) << r.measured.garbage_outputs << '\n';
  }
  return os.str();
}

} // namespace revcount
