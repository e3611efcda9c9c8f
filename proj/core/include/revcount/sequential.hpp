#pragma once

#include "revcount/netlist.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace revcount {

enum class Edge { Rising, Falling };

/// One clocked element of a sequential circuit and the slice of the core it owns.
struct StageBinding {
  std::size_t index = 0;
  std::size_t q_feedback = 0;             ///< index into SequentialCircuit::feedbacks() holding this stage's Q
  std::optional<std::size_t> clock_stage; ///< nullopt: global clock, otherwise the stage whose Q clocks this one
  Edge trigger = Edge::Rising;
  std::size_t first_gate = 0;             ///< gate range [first_gate, end_gate) of the core
  std::size_t end_gate = 0;
  std::optional<std::size_t> clock_line;  ///< core line forced high/low when the stage fires

  friend bool operator==(StageBinding const&, StageBinding const&) = default;
};

struct Feedback {
  std::size_t source; ///< output line carrying the next-state value
  std::size_t dest;   ///< input line receiving it on the next evaluation
  std::uint8_t init;

  friend bool operator==(Feedback const&, Feedback const&) = default;
};

/*! \brief A combinational reversible core plus state feedback and clocking.
 *
 * Feedback registers are the core's Feedback output roles, ordered by source
 * line. Construction checks the invariants and throws std::invalid_argument:
 * stages are numbered 0..n-1 in order, their gate ranges are disjoint and
 * ascending, a ripple stage is clocked by a lower stage, clock lines are not
 * state lines.
 */
class SequentialCircuit {
public:
  SequentialCircuit(Netlist core, std::optional<std::size_t> clock_line, std::vector<StageBinding> stages);

  Netlist const& core() const noexcept { return core_; }
  std::optional<std::size_t> clock_line() const noexcept { return clock_line_; }
  std::span<const StageBinding> stages() const noexcept { return stages_; }
  std::span<const Feedback> feedbacks() const noexcept { return feedbacks_; }

  friend bool operator==(SequentialCircuit const& a, SequentialCircuit const& b)
  {
    return a.core_ == b.core_ && a.clock_line_ == b.clock_line_ && a.stages_ == b.stages_;
  }

private:
  Netlist core_;
  std::optional<std::size_t> clock_line_;
  std::vector<StageBinding> stages_;
  std::vector<Feedback> feedbacks_;
};

/// Register contents (one bit per feedback, in feedbacks() order) and pulses seen so far.
struct CounterState {
  Bits bits;
  std::uint64_t pulse_count = 0;

  friend bool operator==(CounterState const&, CounterState const&) = default;
};

/// Values for primary inputs other than the clock and state lines; missing names read as 0.
using InputAssignment = std::map<std::string, std::uint8_t, std::less<>>;

CounterState initial_state(SequentialCircuit const& circuit);

/// Per-stage Q values, LSB (stage 0) first.
Bits q_bits(SequentialCircuit const& circuit, CounterState const& state);

/// `q_bits` as a string with the highest stage on the left.
std::string format_state(SequentialCircuit const& circuit, CounterState const& state);

struct PulseResult {
  CounterState state;
  std::vector<std::size_t> fired; ///< stages that fired, in firing order
};

/*! \brief Applies one global clock pulse.
 *
 * The core first settles with the global clock low; the line values seen by
 * each stage's first gate are recorded. Stages are then visited LSB first. A
 * globally clocked stage always fires; a ripple stage fires iff the Q of its
 * clock stage made its trigger transition during this pulse. Firing replays
 * the stage's gate range from its recorded values, once with its clock line
 * high and once low, and latches every register whose source line the stage
 * writes. Stages therefore see the pre-pulse state of every other stage.
 */
PulseResult pulse_traced(SequentialCircuit const& circuit, CounterState const& state,
                         InputAssignment const& inputs = {});

CounterState pulse(SequentialCircuit const& circuit, CounterState const& state, InputAssignment const& inputs = {});

/// States after 0..pulses pulses starting from initial_state().
std::vector<CounterState> run(SequentialCircuit const& circuit, std::size_t pulses, InputAssignment const& inputs = {});

/// The combinational core with state lines as inputs and feedback sources as outputs.
Netlist flatten(SequentialCircuit const& circuit);

/// Reads a sequential circuit (any `.rnl` file; `.clock`/`.stage` optional).
SequentialCircuit parse_circuit(std::string_view text);
std::string serialize(SequentialCircuit const& circuit);

} // namespace revcount
