#pragma once

#include "revcount/generators.hpp"
#include "revcount/netlist.hpp"
#include "revcount/sequential.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace revcount {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::string subject;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  void add(std::string name, bool passed, std::string detail = {});
};

/// Raised when an exhaustive check would exceed its enumeration bound.
class BoundExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t max_exhaustive_inputs = 24;

/*! \brief Exhaustive injectivity of the netlist over its free (non-constant) inputs.
 *
 * All 2^F assignments are evaluated with constants fixed; the check fails if
 * two assignments produce the same output vector. Gate instances are applied
 * literally, so a gate naming one line twice can destroy information.
 * Throws BoundExceeded when F > max_free.
 */
VerificationReport check_reversible(Netlist const& netlist, std::size_t max_free = max_exhaustive_inputs);

/// Expected behaviour of some output lines as a function of the free inputs.
struct TruthReference {
  std::vector<std::string> inputs;    ///< primary input names, in the order `fn` receives them
  std::vector<std::size_t> outputs;   ///< output lines compared against `fn`
  std::function<Bits(Bits const&)> fn;
  std::string description;
};

/// Compares the designated output lines to the reference on every assignment.
/// Throws std::invalid_argument if the reference's input names differ from the
/// netlist's free inputs.
VerificationReport check_equivalent(Netlist const& netlist, TruthReference const& reference);

/// Builds every counter with 1..max_bits bits (sync from 3) and requires
/// measured gates/garbage/quantum cost to equal predict_cost() and delay to
/// equal quantum cost. Throws std::invalid_argument when max_bits < 4.
VerificationReport check_theorems(std::size_t max_bits);

/// Runs the circuit and requires state t to read t mod 2^n, LSB first.
VerificationReport check_counting(SequentialCircuit const& circuit, std::size_t pulses, std::string subject = "circuit");
VerificationReport check_counting(CounterSpec const& spec, std::size_t pulses);

/// Every builtin gate: bijective, unitary decomposition equal to its
/// permutation matrix within 1e-9, decomposition length equal to its cost.
VerificationReport check_decompositions();

inline constexpr double unitary_tolerance = 1e-9;

std::string to_text(VerificationReport const& report, bool color = false);
std::string to_json(VerificationReport const& report);

} // namespace revcount
