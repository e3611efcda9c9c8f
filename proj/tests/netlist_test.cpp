#include "revcount/generators.hpp"
#include "revcount/netlist.hpp"
#include "revcount/netlist_format.hpp"

#include <gtest/gtest.h>

using namespace revcount;

namespace {

Netlist t_ff_core()
{
  return flatten(build_t_ff());
}

Bits bits(std::initializer_list<int> v)
{
  Bits b;
  for (auto x : v) {
    b.push_back(static_cast<std::uint8_t>(x));
  }
  return b;
}

ParseError parse_error(std::string_view text)
{
  try {
    parse_netlist(text);
  } catch (ParseError const& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error for:\n" << text;
  return ParseError("none", 0, 0);
}

} // namespace

TEST(netlist, eval_t_flip_flop)
{
  auto const core = t_ff_core();
  EXPECT_EQ(eval(core, bits({1, 0})), bits({1, 1}));
  EXPECT_EQ(eval(core, bits({0, 1})), bits({0, 1}));
  EXPECT_EQ(eval(core, bits({1, 1})), bits({1, 0}));
}

TEST(netlist, eval_clocked_core)
{
  auto const core = flatten(build_clocked_t_ff(ClockedVariant::A));
  // lines: CLK, T, Q, copy (constant 0)
  EXPECT_EQ(eval(core, bits({1, 1, 0, 0}))[2], 1);
  EXPECT_EQ(eval(core, bits({0, 1, 1, 0}))[2], 1);
  EXPECT_EQ(eval(core, bits({0, 1, 0, 0}))[2], 0);
  EXPECT_EQ(eval(core, bits({1, 1, 1, 0}))[2], 0);
}

TEST(netlist, eval_errors)
{
  auto const core = flatten(build_clocked_t_ff(ClockedVariant::A));
  EXPECT_THROW(eval(core, bits({1, 1, 0})), ArityError);
  EXPECT_THROW(eval(core, bits({1, 1, 0, 1})), ConstantViolation);
}

TEST(netlist, empty_netlist_is_identity)
{
  Netlist n(3);
  for (std::uint32_t x = 0; x < 8; ++x) {
    auto const in = unpack_pattern(x, 3);
    EXPECT_EQ(eval(n, in), in);
  }
}

TEST(netlist, add_gate_checks_lines)
{
  Netlist n(2);
  EXPECT_THROW(n.add_gate("FG", {0, 2}), std::out_of_range);
  EXPECT_THROW(n.add_gate("FG", {0}), ArityError);
  EXPECT_THROW(n.add_gate("XYZ", {0, 1}), std::invalid_argument);
  EXPECT_THROW(Netlist(0), std::invalid_argument);
}

TEST(netlist, validate_examples)
{
  EXPECT_TRUE(validate(t_ff_core()).empty());

  Netlist dup(2);
  dup.set_input(0, InputRole::primary("A")).set_output(0, OutputRole::primary("A"));
  dup.set_input(1, InputRole::primary("B")).set_output(1, OutputRole::primary("B"));
  dup.add_gate("FG", {0, 0});
  auto const v = validate(dup);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::DuplicateLine);
  EXPECT_EQ(v[0].gate, 0u);

  Netlist missing(2);
  missing.set_input(0, InputRole::primary("A")).set_output(0, OutputRole::primary("A"));
  missing.set_input(1, InputRole::primary("B"));
  auto const m = validate(missing);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].kind, Violation::Kind::MissingOutputRole);
  EXPECT_EQ(m[0].line, 1u);
}

TEST(netlist, validate_feedback_and_names)
{
  Netlist n(3);
  n.set_input(0, InputRole::primary("A")).set_output(0, OutputRole::primary("X"));
  n.set_input(1, InputRole::constant(0)).set_output(1, OutputRole::feedback(1, 0));
  n.set_input(2, InputRole::primary("A")).set_output(2, OutputRole::primary("X"));
  auto const v = validate(n);
  auto count = [&](Violation::Kind k) {
    return std::count_if(v.begin(), v.end(), [&](auto const& x) { return x.kind == k; });
  };
  EXPECT_EQ(count(Violation::Kind::BadFeedback), 1);
  EXPECT_EQ(count(Violation::Kind::DuplicateName), 2);
}

TEST(netlist_format, serialize_t_flip_flop)
{
  auto const text = serialize(t_ff_core());
  EXPECT_NE(text.find(".rnl 1\n"), std::string::npos);
  EXPECT_NE(text.find(".lines 2\n"), std::string::npos);
  EXPECT_NE(text.find("gate FG 0 1\n"), std::string::npos);
  EXPECT_NE(text.find(".feedback 1 1 0\n"), std::string::npos);
  EXPECT_EQ(parse_netlist(text), t_ff_core());
}

TEST(netlist_format, round_trip_counter)
{
  auto const core = flatten(build_counter({4, CounterMode::Async}));
  auto const text = serialize(core);
  EXPECT_EQ(parse_netlist(text), core);
  EXPECT_EQ(serialize(parse_netlist(text)), text);
}

TEST(netlist_format, comments_and_whitespace)
{
  auto const n = parse_netlist("# a comment\n"
                               "  .rnl 1   # header\n"
                               "\n"
                               ".lines 2\r\n"
                               ".input 0 A\n.input 1 B\n"
                               ".output 0 A\n\t.garbage 1\n"
                               "gate FG 0 1 # copy\n"
                               ".end\n");
  EXPECT_EQ(n.line_count(), 2u);
  ASSERT_EQ(n.gates().size(), 1u);
  EXPECT_EQ(n.gates()[0].gate->name(), "FG");
}

TEST(netlist_format, unknown_gate)
{
  auto const e = parse_error(".rnl 1\n.lines 2\n.input 0 A\n.input 1 B\n.output 0 A\n.output 1 B\ngate XYZ 0 1\n.end\n");
  EXPECT_EQ(e.line(), 7u);
  EXPECT_EQ(e.column(), 6u);
  EXPECT_NE(e.message().find("unknown gate"), std::string::npos);
}

TEST(netlist_format, located_errors)
{
  struct Case {
    std::string text;
    std::size_t line;
    std::size_t column;
    std::string fragment;
  };
  std::string const head = ".rnl 1\n.lines 2\n";
  std::string const roles = ".input 0 A\n.input 1 B\n.output 0 A\n.output 1 B\n";
  std::vector<Case> const cases{
    {"", 1, 1, "missing .end"},
    {".lines 2\n", 1, 1, ".rnl 1"},
    {".rnl 2\n", 1, 6, "version"},
    {head + ".input 2 A\n", 3, 8, "out of range"},
    {head + ".input 0 A\n.const 0 1\n", 4, 8, "duplicate input role"},
    {head + ".input 0 A\n.output 0 A\n.garbage 0\n", 5, 10, "duplicate output role"},
    {head + ".const 0 2\n", 3, 10, "0 or 1"},
    {head + ".input 0 1abc\n", 3, 10, "invalid name"},
    {head + roles + "gate FG 0\n", 7, 10, "expects 2"},
    {head + roles + "gate FG 0 1 1\n", 7, 13, "unexpected token"},
    {head + roles + "gate TG 0 -1 1\n", 7, 11, "integer"},
    {head + roles + ".bogus\n", 7, 1, "unknown directive"},
    {head + roles + ".end\ngate FG 0 1\n", 8, 1, "after .end"},
    {head + ".input 0 A\n.output 0 A\n.end\n", 5, 1, "line 1 has no input"},
    {head + ".input 0 A\n.input 1 B\n.output 0 A\n.end\n", 6, 1, "line 1 has no output"},
    {head + ".input 0 A\n.const 1 0\n.output 0 A\n.feedback 1 1 0\n.end\n", 6, 13, "constant"},
    {".rnl 1\n.input 0 A\n", 2, 8, ".lines must precede"},
    {head + roles + ".stage 0 x rise 0 0 - 0\n", 7, 10, "global"},
  };
  for (auto const& c : cases) {
    auto const e = parse_error(c.text);
    EXPECT_EQ(e.line(), c.line) << c.text;
    EXPECT_EQ(e.column(), c.column) << c.text;
    EXPECT_NE(e.message().find(c.fragment), std::string::npos) << e.what();
  }
}

TEST(netlist_format, accepts_repeated_line_in_gate)
{
  auto const n = parse_netlist(".rnl 1\n.lines 2\n.input 0 A\n.input 1 B\n.output 0 A\n.output 1 B\ngate FG 0 0\n.end\n");
  EXPECT_FALSE(validate(n).empty());
}

TEST(netlist_format, error_message_carries_location)
{
  auto const e = parse_error(".rnl 1\n.lines 1\n.input 0 A\n.output 0 A\ngate FG 0 5\n.end\n");
  EXPECT_EQ(std::string(e.what()).substr(0, 5), "5:11:");
}
