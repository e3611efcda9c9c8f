#pragma once

#include "revcount/netlist.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace revcount::detail {

// `.stage` directive as written in the file, before it is checked against the core.
struct RawStage {
  std::size_t index = 0;
  std::optional<std::size_t> clock_stage; // nullopt: global clock
  bool falling = false;
  std::size_t first_gate = 0;
  std::size_t end_gate = 0;
  std::optional<std::size_t> clock_line;
  std::size_t feedback = 0;
  std::size_t source_line = 0; // position in the text, for error reporting
};

struct Document {
  Netlist netlist;
  std::optional<std::size_t> clock;
  std::vector<RawStage> stages;
  std::size_t end_line = 0;
};

Document parse_document(std::string_view text);

std::string write_document(Netlist const& netlist, std::optional<std::size_t> clock, std::span<const RawStage> stages);

} // namespace revcount::detail
