#pragma once

#include "revcount/netlist.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace revcount {

/*! \brief Error raised while reading the `.rnl` text format.
 *
 * `line` and `column` are 1-based and point at the offending token (or at the
 * end of input for a missing `.end`).
 */
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  std::string const& message() const noexcept { return message_; }

private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/*! \brief Reads a netlist in the `.rnl 1` text format.
 *
 * \verbatim
 .rnl 1
 .lines <L>
 .input <idx> <name>          .const <idx> <0|1>
 .output <idx> <name>         .garbage <idx>       .consumed <idx>
 .feedback <out_idx> <in_idx> <init_bit>
 .clock <idx>
 .stage <i> <global|q<j>> <rise|fall> <first_gate> <end_gate> <clock_line|-> <feedback>
 gate <NAME> <idx> [<idx> [<idx>]]
 .end
 \endverbatim
 *
 * `#` starts a comment. Line indices are 0-based. `.clock` and `.stage`
 * describe sequential behaviour; this function checks and then drops them, use
 * parse_circuit() to keep them.
 */
Netlist parse_netlist(std::string_view text);

/// Canonical text form: header, input roles, output roles, gates, `.end`.
std::string serialize(Netlist const& netlist);

} // namespace revcount
