#pragma once

#include "revcount/netlist.hpp"

#include <cstddef>
#include <string>

namespace revcount {

struct CostReport {
  std::size_t gate_count = 0;
  std::size_t quantum_cost = 0;
  std::size_t delay = 0;
  std::size_t garbage_outputs = 0;
  std::size_t constant_inputs = 0;

  friend bool operator==(CostReport const&, CostReport const&) = default;
};

std::size_t gate_count(Netlist const& netlist);
std::size_t quantum_cost(Netlist const& netlist);

/*! \brief Logical depth of the cascade in quantum-cost units.
 *
 * A gate starts once every earlier gate sharing one of its lines has
 * finished, and occupies its lines for `quantum_cost()` steps. The result is
 * the weight of the heaviest dependency path; gates on disjoint lines overlap.
 */
std::size_t delay(Netlist const& netlist);

std::size_t garbage_count(Netlist const& netlist);
std::size_t constant_count(Netlist const& netlist);

CostReport measure(Netlist const& netlist);

/// "gates N\nquantum_cost N\n..." one metric per line.
std::string to_text(CostReport const& report);
std::string csv_header();
std::string to_csv_row(CostReport const& report);
/// Single-line JSON object with keys gates, quantum_cost, delay, garbage, constants.
std::string to_json(CostReport const& report);

} // namespace revcount
