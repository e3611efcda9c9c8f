#pragma once

#include "revcount/generators.hpp"
#include "revcount/metrics.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace revcount {

/// Published figures for a competing design, copied verbatim; never computed.
struct Baseline {
  std::string_view design;
  std::string_view citation;
  std::size_t quantum_cost;
  std::size_t delay;
  std::size_t garbage;
};

struct ComparisonTable {
  std::string_view id;    ///< "I" .. "IV"
  std::string_view title;
  CostReport proposed;    ///< measured from the generated design
  std::span<const Baseline> baselines;
};

std::span<const Baseline> clocked_t_ff_baselines();
std::span<const Baseline> ms_t_ff_baselines();
std::span<const Baseline> async_counter_baselines();
std::span<const Baseline> sync_counter_baselines();

/// The four comparison tables with freshly measured "Proposed" rows.
std::vector<ComparisonTable> comparison_tables();

std::string render_tables(std::span<const ComparisonTable> tables);

struct ScalingRow {
  CounterMode mode;
  std::size_t bits;
  CostReport measured;
  PredictedCost predicted;
};

std::vector<ScalingRow> scaling_rows(std::size_t max_bits, std::span<const CounterMode> modes);

/// `mode,n,gates,measured_qc,predicted_qc,delay,garbage`; NA where no formula applies.
std::string render_scaling_csv(std::span<const ScalingRow> rows);
std::string render_scaling_text(std::span<const ScalingRow> rows);

} // namespace revcount
