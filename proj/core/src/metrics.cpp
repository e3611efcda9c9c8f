#include "revcount/metrics.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>

namespace revcount {

std::size_t gate_count(Netlist const& netlist)
{
  return netlist.gates().size();
}

std::size_t quantum_cost(Netlist const& netlist)
{
  std::size_t total = 0;
  for (auto const& g : netlist.gates()) {
    total += g.gate->quantum_cost();
  }
  return total;
}

std::size_t delay(Netlist const& netlist)
{
  std::vector<std::size_t> ready(netlist.line_count(), 0);
  std::size_t depth = 0;
  for (auto const& g : netlist.gates()) {
    std::size_t start = 0;
    for (auto l : g.lines) {
      start = std::max(start, ready[l]);
    }
    auto const finish = start + g.gate->quantum_cost();
    for (auto l : g.lines) {
      ready[l] = finish;
    }
    depth = std::max(depth, finish);
  }
  return depth;
}

std::size_t garbage_count(Netlist const& netlist)
{
  std::size_t n = 0;
  for (std::size_t i = 0; i < netlist.line_count(); ++i) {
    auto const& o = netlist.output(i);
    n += o && o->kind == OutputRole::Kind::Garbage;
  }
  return n;
}

std::size_t constant_count(Netlist const& netlist)
{
  std::size_t n = 0;
  for (std::size_t i = 0; i < netlist.line_count(); ++i) {
    auto const& in = netlist.input(i);
    n += in && in->is_constant();
  }
  return n;
}

CostReport measure(Netlist const& netlist)
{
  return {gate_count(netlist), quantum_cost(netlist), delay(netlist), garbage_count(netlist),
          constant_count(netlist)};
}

std::string to_text(CostReport const& r)
{
  std::ostringstream os;
  os << "gates " << r.gate_count << '\n'
     << "quantum_cost " << r.quantum_cost << '\n'
     << "delay " << r.delay << '\n'
     << "garbage " << r.garbage_outputs << '\n'
     << "constants " << r.constant_inputs << '\n';
  return os.str();
}

std::string csv_header()
{
  return "gates,quantum_cost,delay,garbage,constants";
}

std::string to_csv_row(CostReport const& r)
{
  std::ostringstream os;
  os << r.gate_count << ',' << r.quantum_cost << ',' << r.delay << ',' << r.garbage_outputs << ','
     << r.constant_inputs;
  return os.str();
}

std::string to_json(CostReport const& r)
{
  nlohmann::ordered_json j;
  j["gates"] = r.gate_count;
  j["quantum_cost"] = r.quantum_cost;
  j["delay"] = r.delay;
  j["garbage"] = r.garbage_outputs;
  j["constants"] = r.constant_inputs;
  return j.dump();
}

} // namespace revcount
