#pragma once

#include "revcount/sequential.hpp"

#include <cstddef>
#include <optional>
#include <string_view>

namespace revcount {

enum class CounterMode { Async, Sync };

std::string_view to_string(CounterMode mode);
std::optional<CounterMode> parse_counter_mode(std::string_view text);

struct CounterSpec {
  std::size_t bits = 1;
  CounterMode mode = CounterMode::Async;
};

/// Closed-form gate count, garbage and quantum cost of a generated counter.
/// `applicable` is false for sync counters below 3 bits, where no formula is
/// claimed and the numeric fields are left at zero.
struct PredictedCost {
  std::size_t gates = 0;
  std::size_t garbage = 0;
  std::size_t quantum = 0;
  bool applicable = false;

  friend bool operator==(PredictedCost const&, PredictedCost const&) = default;
};

/// Unclocked T flip-flop: a single FG on (T, Q); Q toggles whenever T is 1.
SequentialCircuit build_t_ff();

/*! \brief Clocked T flip-flop, Q' = (T & CLK) ^ Q, from a PG and an FG.
 *
 * Lines: 0 CLK, 1 T (garbage CLK^T), 2 Q (state), 3 constant-0 copy of the
 * new Q. Variant A exports the copy as the stage output `Q` and is the cell
 * of synchronous counters; variant B exports it as `CLK_NEXT`, the ripple
 * clock of a following stage, and is the cell of asynchronous counters.
 */
enum class ClockedVariant { A, B };
SequentialCircuit build_clocked_t_ff(ClockedVariant variant);

/// Master-slave T flip-flop: MPG master whose inverted clock output drives a
/// PG slave, plus two FG copies. Registers: master M, slave Q (the stage output).
SequentialCircuit build_ms_t_ff();

/*! \brief n-bit binary up-counter.
 *
 * Async: stage k is PG(clk_k, 1, Q_k) followed by a DFG copying the new Q_k
 * to the output and to the clock line of stage k+1 (an FG for the last
 * stage). Stage k+1 fires on the falling edge of Q_k.
 *
 * Sync: every stage is clocked globally and ends in PG(CLK, T_k, Q_k) +
 * FG(Q_k, out_k). The toggle conditions come from the output copies: T_1 is an
 * FG copy of out_0, T_k = T_{k-1} & out_{k-1} via a TG into a constant-0
 * line, and partial products needed further up are FG-copied.
 *
 * Throws std::invalid_argument when bits < 1.
 */
SequentialCircuit build_counter(CounterSpec const& spec);

PredictedCost predict_cost(CounterSpec const& spec);

} // namespace revcount
