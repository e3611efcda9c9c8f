#include "revcount/sequential.hpp"

#include "format_detail.hpp"
#include "revcount/netlist_format.hpp"

#include <algorithm>
#include <set>

namespace revcount {

namespace {

bool is_state_line(std::span<const Feedback> feedbacks, std::size_t line)
{
  return std::any_of(feedbacks.begin(), feedbacks.end(), [&](auto const& f) { return f.dest == line; });
}

// Registers whose source line is written by gates [first, end).
std::vector<std::size_t> owned_registers(Netlist const& core, std::span<const Feedback> feedbacks,
                                         StageBinding const& stage)
{
  std::set<std::size_t> touched;
  auto const gates = core.gates();
  for (auto k = stage.first_gate; k < stage.end_gate; ++k) {
    touched.insert(gates[k].lines.begin(), gates[k].lines.end());
  }
  std::vector<std::size_t> owned;
  for (std::size_t r = 0; r < feedbacks.size(); ++r) {
    if (touched.contains(feedbacks[r].source)) {
      owned.push_back(r);
    }
  }
  return owned;
}

} // namespace

SequentialCircuit::SequentialCircuit(Netlist core, std::optional<std::size_t> clock_line,
                                     std::vector<StageBinding> stages)
  : core_(std::move(core))
  , clock_line_(clock_line)
  , stages_(std::move(stages))
{
  if (auto const violations = validate(core_); !violations.empty()) {
    throw std::invalid_argument("invalid core: " + violations.front().message);
  }
  for (std::size_t i = 0; i < core_.line_count(); ++i) {
    if (auto const& o = core_.output(i); o->kind == OutputRole::Kind::Feedback) {
      feedbacks_.push_back({i, o->feedback_dest, o->feedback_init});
    }
  }

  auto const lines = core_.line_count();
  auto const gate_total = core_.gates().size();
  if (clock_line_) {
    if (*clock_line_ >= lines || core_.input(*clock_line_)->is_constant() || is_state_line(feedbacks_, *clock_line_)) {
      throw std::invalid_argument("clock line must be a non-state primary input");
    }
  }
  std::size_t previous_end = 0;
  for (std::size_t i = 0; i < stages_.size(); ++i) {
    auto const& s = stages_[i];
    auto const where = "stage " + std::to_string(i) + ": ";
    if (s.index != i) {
      throw std::invalid_argument(where + "stages must be numbered 0..n-1 in order");
    }
    if (s.q_feedback >= feedbacks_.size()) {
      throw std::invalid_argument(where + "feedback index out of range");
    }
    if (s.clock_stage && *s.clock_stage >= i) {
      throw std::invalid_argument(where + "ripple clock must come from a lower stage");
    }
    if (s.first_gate > s.end_gate || s.end_gate > gate_total || s.first_gate < previous_end) {
      throw std::invalid_argument(where + "gate range must be ascending, disjoint and within the core");
    }
    if (s.clock_line && (*s.clock_line >= lines || is_state_line(feedbacks_, *s.clock_line))) {
      throw std::invalid_argument(where + "clock line must be a non-state line");
    }
    previous_end = s.end_gate;
  }
}

CounterState initial_state(SequentialCircuit const& circuit)
{
  CounterState s;
  for (auto const& f : circuit.feedbacks()) {
    s.bits.push_back(f.init);
  }
  return s;
}

Bits q_bits(SequentialCircuit const& circuit, CounterState const& state)
{
  Bits q;
  for (auto const& s : circuit.stages()) {
    q.push_back(state.bits.at(s.q_feedback));
  }
  return q;
}

std::string format_state(SequentialCircuit const& circuit, CounterState const& state)
{
  auto const q = q_bits(circuit, state);
  std::string out;
  for (auto it = q.rbegin(); it != q.rend(); ++it) {
    out.push_back(*it ? '1' : '0');
  }
  return out;
}

PulseResult pulse_traced(SequentialCircuit const& circuit, CounterState const& state, InputAssignment const& inputs)
{
  auto const& core = circuit.core();
  auto const feedbacks = circuit.feedbacks();
  auto const stages = circuit.stages();
  if (state.bits.size() != feedbacks.size()) {
    throw ArityError("state has " + std::to_string(state.bits.size()) + " bits, circuit has " +
                     std::to_string(feedbacks.size()) + " registers");
  }

  Bits lines(core.line_count(), 0);
  for (std::size_t i = 0; i < core.line_count(); ++i) {
    auto const& in = *core.input(i);
    if (in.is_constant()) {
      lines[i] = in.value;
    } else if (auto it = inputs.find(in.name); it != inputs.end()) {
      lines[i] = it->second & 1u;
    }
  }
  for (std::size_t r = 0; r < feedbacks.size(); ++r) {
    lines[feedbacks[r].dest] = state.bits[r];
  }
  if (auto clk = circuit.clock_line()) {
    lines[*clk] = 0;
  }

  std::vector<Bits> snapshot;
  snapshot.reserve(stages.size());
  std::size_t cursor = 0;
  for (auto const& s : stages) {
    apply_gates(core, lines, cursor, s.first_gate);
    cursor = s.first_gate;
    snapshot.push_back(lines);
  }

  PulseResult result{state, {}};
  auto& next = result.state;
  for (auto const& s : stages) {
    bool fires = true;
    if (s.clock_stage) {
      auto const r = stages[*s.clock_stage].q_feedback;
      auto const before = state.bits[r];
      auto const after = next.bits[r];
      fires = s.trigger == Edge::Falling ? (before == 1 && after == 0) : (before == 0 && after == 1);
    }
    if (!fires) {
      continue;
    }
    result.fired.push_back(s.index);

    auto const owned = owned_registers(core, feedbacks, s);
    auto work = snapshot[s.index];
    if (s.clock_line) {
      work[*s.clock_line] = 1;
    }
    apply_gates(core, work, s.first_gate, s.end_gate);
    for (auto r : owned) {
      next.bits[r] = work[feedbacks[r].source];
    }
    if (s.clock_line) {
      work = snapshot[s.index];
      for (auto r : owned) {
        work[feedbacks[r].dest] = next.bits[r];
      }
      work[*s.clock_line] = 0;
      apply_gates(core, work, s.first_gate, s.end_gate);
      for (auto r : owned) {
        next.bits[r] = work[feedbacks[r].source];
      }
    }
  }
  ++next.pulse_count;
  return result;
}

CounterState pulse(SequentialCircuit const& circuit, CounterState const& state, InputAssignment const& inputs)
{
  return pulse_traced(circuit, state, inputs).state;
}

std::vector<CounterState> run(SequentialCircuit const& circuit, std::size_t pulses, InputAssignment const& inputs)
{
  std::vector<CounterState> states;
  states.reserve(pulses + 1);
  states.push_back(initial_state(circuit));
  for (std::size_t t = 0; t < pulses; ++t) {
    states.push_back(pulse(circuit, states.back(), inputs));
  }
  return states;
}

Netlist flatten(SequentialCircuit const& circuit)
{
  return circuit.core();
}

SequentialCircuit parse_circuit(std::string_view text)
{
  auto doc = detail::parse_document(text);
  auto const gate_total = doc.netlist.gates().size();

  std::size_t register_count = 0;
  for (std::size_t i = 0; i < doc.netlist.line_count(); ++i) {
    register_count += doc.netlist.output(i)->kind == OutputRole::Kind::Feedback;
  }

  std::vector<StageBinding> stages;
  for (auto const& raw : doc.stages) {
    auto const fail = [&](std::string const& message) -> void { throw ParseError(message, raw.source_line, 1); };
    if (raw.index != stages.size()) {
      fail("expected .stage " + std::to_string(stages.size()) + ", got " + std::to_string(raw.index));
    }
    if (raw.first_gate > raw.end_gate || raw.end_gate > gate_total) {
      fail("stage gate range out of bounds");
    }
    if (raw.feedback >= register_count) {
      fail("stage feedback index out of range");
    }
    if (raw.clock_stage && *raw.clock_stage >= raw.index) {
      fail("ripple clock must come from a lower stage");
    }
    stages.push_back({raw.index, raw.feedback, raw.clock_stage, raw.falling ? Edge::Falling : Edge::Rising,
                      raw.first_gate, raw.end_gate, raw.clock_line});
  }
  if (stages.empty() && register_count > 0) {
    stages.push_back({0, 0, std::nullopt, Edge::Rising, 0, gate_total, doc.clock});
  }

  try {
    return SequentialCircuit(std::move(doc.netlist), doc.clock, std::move(stages));
  } catch (std::invalid_argument const& e) {
    throw ParseError(e.what(), doc.end_line, 1);
  }
}

std::string serialize(SequentialCircuit const& circuit)
{
  std::vector<detail::RawStage> raw;
  for (auto const& s : circuit.stages()) {
    raw.push_back({s.index, s.clock_stage, s.trigger == Edge::Falling, s.first_gate, s.end_gate, s.clock_line,
                   s.q_feedback, 0});
  }
  return detail::write_document(circuit.core(), circuit.clock_line(), raw);
}

} // namespace revcount
