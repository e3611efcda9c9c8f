#pragma once

#include "revcount/gatelib.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace revcount {

/// How a line enters the cascade: a named primary input or a constant (ancilla).
struct InputRole {
  enum class Kind { Primary, Constant };

  Kind kind = Kind::Primary;
  std::string name;       // Primary only
  std::uint8_t value = 0; // Constant only

  static InputRole primary(std::string name) { return {Kind::Primary, std::move(name), 0}; }
  static InputRole constant(std::uint8_t bit) { return {Kind::Constant, {}, static_cast<std::uint8_t>(bit & 1u)}; }

  bool is_constant() const noexcept { return kind == Kind::Constant; }
  friend bool operator==(InputRole const&, InputRole const&) = default;
};

/*! \brief What happens to a line's final value.
 *
 * `Consumed` marks values that feed another structure (a carry or a ripple
 * clock) and are therefore not garbage. `Feedback` lines hold next-state
 * values that are fed back to input line `feedback_dest` on the next clock.
 */
struct OutputRole {
  enum class Kind { Primary, Garbage, Feedback, Consumed };

  Kind kind = Kind::Garbage;
  std::string name;                  // Primary only
  std::size_t feedback_dest = 0;     // Feedback only
  std::uint8_t feedback_init = 0;    // Feedback only

  static OutputRole primary(std::string name) { return {Kind::Primary, std::move(name), 0, 0}; }
  static OutputRole garbage() { return {Kind::Garbage, {}, 0, 0}; }
  static OutputRole consumed() { return {Kind::Consumed, {}, 0, 0}; }
  static OutputRole feedback(std::size_t dest, std::uint8_t init)
  {
    return {Kind::Feedback, {}, dest, static_cast<std::uint8_t>(init & 1u)};
  }

  friend bool operator==(OutputRole const&, OutputRole const&) = default;
};

struct GateInstance {
  GateDef const* gate = nullptr;
  std::vector<std::size_t> lines;

  friend bool operator==(GateInstance const& a, GateInstance const& b)
  {
    return a.gate == b.gate && a.lines == b.lines;
  }
};

/*! \brief A cascade of builtin gates over a fixed set of lines.
 *
 * Roles are optional while a netlist is being assembled; `validate()` reports
 * any line still lacking one. Gates are applied in insertion order.
 */
class Netlist {
public:
  explicit Netlist(std::size_t line_count = 1);

  std::size_t line_count() const noexcept { return inputs_.size(); }

  Netlist& set_input(std::size_t line, InputRole role);
  Netlist& set_output(std::size_t line, OutputRole role);

  /// Appends a gate instance; throws std::out_of_range for a line index >= line_count
  /// and ArityError when the number of lines does not match the gate.
  Netlist& add_gate(GateDef const& g, std::vector<std::size_t> lines);
  Netlist& add_gate(std::string_view name, std::vector<std::size_t> lines);

  std::optional<InputRole> const& input(std::size_t line) const { return inputs_.at(line); }
  std::optional<OutputRole> const& output(std::size_t line) const { return outputs_.at(line); }
  std::span<const GateInstance> gates() const noexcept { return gates_; }

  /// Lines whose input role is not a constant, in ascending order.
  std::vector<std::size_t> free_lines() const;

  /// Line carrying the primary input (or output) with the given name.
  std::optional<std::size_t> find_input(std::string_view name) const;
  std::optional<std::size_t> find_output(std::string_view name) const;

  friend bool operator==(Netlist const&, Netlist const&) = default;

private:
  std::vector<std::optional<InputRole>> inputs_;
  std::vector<std::optional<OutputRole>> outputs_;
  std::vector<GateInstance> gates_;
};

/// Applies gates [first, last) to `lines` in place. Each gate reads its lines,
/// applies its permutation and writes the results back in operand order.
void apply_gates(Netlist const& netlist, std::span<std::uint8_t> lines, std::size_t first, std::size_t last);

/// Evaluates the whole cascade. The input must have one bit per line and
/// agree with every constant role.
Bits eval(Netlist const& netlist, std::span<const std::uint8_t> input);

/// Raised by eval when a constant line carries the wrong value.
class ConstantViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Violation {
  enum class Kind {
    DuplicateLine,
    MissingInputRole,
    MissingOutputRole,
    BadFeedback,
    DuplicateName,
  };

  Kind kind;
  std::optional<std::size_t> line;
  std::optional<std::size_t> gate;
  std::string message;
};

/// All structural problems in the netlist; empty iff it is well formed.
std::vector<Violation> validate(Netlist const& netlist);

} // namespace revcount
