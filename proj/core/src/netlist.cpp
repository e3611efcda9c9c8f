#include "revcount/netlist.hpp"

#include <algorithm>
#include <set>

namespace revcount {

Netlist::Netlist(std::size_t line_count)
  : inputs_(line_count)
  , outputs_(line_count)
{
  if (line_count == 0) {
    throw std::invalid_argument("netlist needs at least one line");
  }
}

Netlist& Netlist::set_input(std::size_t line, InputRole role)
{
  inputs_.at(line) = std::move(role);
  return *this;
}

Netlist& Netlist::set_output(std::size_t line, OutputRole role)
{
  outputs_.at(line) = std::move(role);
  return *this;
}

Netlist& Netlist::add_gate(GateDef const& g, std::vector<std::size_t> lines)
{
  if (lines.size() != g.arity()) {
    throw ArityError("gate " + g.name() + " takes " + std::to_string(g.arity()) + " lines, got " +
                     std::to_string(lines.size()));
  }
  for (auto l : lines) {
    if (l >= line_count()) {
      throw std::out_of_range("line " + std::to_string(l) + " out of range (netlist has " +
                              std::to_string(line_count()) + " lines)");
    }
  }
  gates_.push_back({&g, std::move(lines)});
  return *this;
}

Netlist& Netlist::add_gate(std::string_view name, std::vector<std::size_t> lines)
{
  return add_gate(gate(name), std::move(lines));
}

std::vector<std::size_t> Netlist::free_lines() const
{
  std::vector<std::size_t> lines;
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    if (!inputs_[i] || !inputs_[i]->is_constant()) {
      lines.push_back(i);
    }
  }
  return lines;
}

std::optional<std::size_t> Netlist::find_input(std::string_view name) const
{
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    if (inputs_[i] && inputs_[i]->kind == InputRole::Kind::Primary && inputs_[i]->name == name) {
      return i;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> Netlist::find_output(std::string_view name) const
{
  for (std::size_t i = 0; i < outputs_.size(); ++i) {
    if (outputs_[i] && outputs_[i]->kind == OutputRole::Kind::Primary && outputs_[i]->name == name) {
      return i;
    }
  }
  return std::nullopt;
}

void apply_gates(Netlist const& netlist, std::span<std::uint8_t> lines, std::size_t first, std::size_t last)
{
  auto const gates = netlist.gates();
  last = std::min(last, gates.size());
  std::uint8_t operand[3];
  for (auto k = first; k < last; ++k) {
    auto const& inst = gates[k];
    auto const n = inst.lines.size();
    for (std::size_t j = 0; j < n; ++j) {
      operand[j] = lines[inst.lines[j]];
    }
    auto const out = inst.gate->map(pack_pattern({operand, n}));
    for (std::size_t j = 0; j < n; ++j) {
      lines[inst.lines[j]] = (out >> j) & 1u;
    }
  }
}

Bits eval(Netlist const& netlist, std::span<const std::uint8_t> input)
{
  if (input.size() != netlist.line_count()) {
    throw ArityError("netlist has " + std::to_string(netlist.line_count()) + " lines, input has " +
                     std::to_string(input.size()) + " bits");
  }
  for (std::size_t i = 0; i < input.size(); ++i) {
    auto const& role = netlist.input(i);
    if (role && role->is_constant() && (input[i] & 1u) != role->value) {
      throw ConstantViolation("line " + std::to_string(i) + " is constant " + std::to_string(role->value));
    }
  }
  Bits lines(input.begin(), input.end());
  apply_gates(netlist, lines, 0, netlist.gates().size());
  return lines;
}

std::vector<Violation> validate(Netlist const& netlist)
{
  std::vector<Violation> out;
  auto const gates = netlist.gates();

  for (std::size_t k = 0; k < gates.size(); ++k) {
    std::set<std::size_t> seen;
    for (auto l : gates[k].lines) {
      if (!seen.insert(l).second) {
        out.push_back({Violation::Kind::DuplicateLine, l, k,
                       "gate " + std::to_string(k) + " (" + gates[k].gate->name() + ") uses line " +
                         std::to_string(l) + " more than once"});
      }
    }
  }

  std::set<std::string> input_names, output_names;
  std::set<std::size_t> feedback_dests;
  for (std::size_t i = 0; i < netlist.line_count(); ++i) {
    auto const& in = netlist.input(i);
    auto const& o = netlist.output(i);
    if (!in) {
      out.push_back({Violation::Kind::MissingInputRole, i, std::nullopt,
                     "line " + std::to_string(i) + " has no input role"});
    } else if (in->kind == InputRole::Kind::Primary && !input_names.insert(in->name).second) {
      out.push_back({Violation::Kind::DuplicateName, i, std::nullopt,
                     "input name '" + in->name + "' declared twice"});
    }
    if (!o) {
      out.push_back({Violation::Kind::MissingOutputRole, i, std::nullopt,
                     "line " + std::to_string(i) + " has no output role"});
      continue;
    }
    if (o->kind == OutputRole::Kind::Primary && !output_names.insert(o->name).second) {
      out.push_back({Violation::Kind::DuplicateName, i, std::nullopt,
                     "output name '" + o->name + "' declared twice"});
    }
    if (o->kind == OutputRole::Kind::Feedback) {
      auto const dest = o->feedback_dest;
      if (dest >= netlist.line_count()) {
        out.push_back({Violation::Kind::BadFeedback, i, std::nullopt,
                       "feedback from line " + std::to_string(i) + " targets missing line " + std::to_string(dest)});
      } else if (auto const& din = netlist.input(dest); !din || din->kind != InputRole::Kind::Primary) {
        out.push_back({Violation::Kind::BadFeedback, i, std::nullopt,
                       "feedback destination line " + std::to_string(dest) + " is not a primary input"});
      } else if (!feedback_dests.insert(dest).second) {
        out.push_back({Violation::Kind::BadFeedback, i, std::nullopt,
                       "line " + std::to_string(dest) + " receives more than one feedback"});
      }
    }
  }
  return out;
}

} // namespace revcount
