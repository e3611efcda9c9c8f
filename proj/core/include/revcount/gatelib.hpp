#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace revcount {

/// Line values of a circuit or gate, one entry (0 or 1) per line.
using Bits = std::vector<std::uint8_t>;

/*! \brief Elementary quantum operations a reversible gate is decomposed into.
 *
 * Every primitive acts on at most two lines and is counted as one unit of
 * quantum cost. `CtrlV` applies the square root of NOT to the target when the
 * control is 1, `CtrlVDag` its adjoint. `CnotNot` is the 2x2 reversible map
 * (c, t) -> (!c, c ^ t), i.e. a CNOT whose control line is inverted after use.
 */
enum class PrimitiveKind { Not, Cnot, CtrlV, CtrlVDag, CnotNot };

std::string_view to_string(PrimitiveKind kind);

struct QuantumPrimitive {
  PrimitiveKind kind;
  std::size_t target;
  std::optional<std::size_t> control;

  friend bool operator==(QuantumPrimitive const&, QuantumPrimitive const&) = default;
};

/// Raised when a bit-vector does not match the width of the gate or netlist it is applied to.
class ArityError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/*! \brief A named reversible gate on 1 to 3 lines.
 *
 * Patterns are encoded with line j of the gate in bit j (the first operand,
 * usually called A, is bit 0). `permutation()[x]` is the output pattern for
 * input pattern x.
 */
class GateDef {
public:
  GateDef(std::string name, std::size_t arity, std::vector<std::uint32_t> permutation,
          std::size_t quantum_cost, std::vector<QuantumPrimitive> decomposition);

  std::string const& name() const noexcept { return name_; }
  std::size_t arity() const noexcept { return arity_; }
  std::span<const std::uint32_t> permutation() const noexcept { return permutation_; }
  std::size_t quantum_cost() const noexcept { return quantum_cost_; }
  std::span<const QuantumPrimitive> decomposition() const noexcept { return decomposition_; }

  std::uint32_t map(std::uint32_t pattern) const { return permutation_.at(pattern); }
  std::uint32_t inverse_map(std::uint32_t pattern) const { return inverse_.at(pattern); }

private:
  std::string name_;
  std::size_t arity_;
  std::vector<std::uint32_t> permutation_;
  std::vector<std::uint32_t> inverse_;
  std::size_t quantum_cost_;
  std::vector<QuantumPrimitive> decomposition_;
};

/// The six gates available to netlists: NOT, FG, DFG, PG, MPG, TG.
std::span<const GateDef> builtin_gates();

/// Looks up a builtin gate by its exact (uppercase) name; nullptr if unknown.
GateDef const* find_gate(std::string_view name);

/// Like find_gate, but throws std::invalid_argument for unknown names.
GateDef const& gate(std::string_view name);

Bits apply_gate(GateDef const& g, std::span<const std::uint8_t> input);
Bits apply_inverse(GateDef const& g, std::span<const std::uint8_t> output);

std::uint32_t pack_pattern(std::span<const std::uint8_t> bits);
Bits unpack_pattern(std::uint32_t pattern, std::size_t width);

/// Square root of NOT used by the controlled-V primitives; V*V equals the Pauli X matrix.
Eigen::Matrix2cd sqrt_not();

/// Matrix of one primitive acting on `lines` lines (basis index bit j = line j).
Eigen::MatrixXcd primitive_matrix(QuantumPrimitive const& p, std::size_t lines);

/// Product of the decomposition's primitive matrices, first primitive applied first.
Eigen::MatrixXcd decomposition_unitary(GateDef const& g);

/// 0/1 matrix with a single 1 per column at row permutation[column].
Eigen::MatrixXcd permutation_matrix(GateDef const& g);

} // namespace revcount
