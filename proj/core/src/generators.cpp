#include "revcount/generators.hpp"

#include <stdexcept>
#include <string>

namespace revcount {

namespace {

// Hands out consecutive line indices while a design is assembled.
class LinePlan {
public:
  std::size_t add(InputRole in, OutputRole out)
  {
    inputs_.push_back(std::move(in));
    outputs_.push_back(std::move(out));
    return inputs_.size() - 1;
  }

  void set_output(std::size_t line, OutputRole out) { outputs_.at(line) = std::move(out); }

  Netlist netlist() const
  {
    Netlist n(inputs_.size());
    for (std::size_t i = 0; i < inputs_.size(); ++i) {
      n.set_input(i, inputs_[i]);
      n.set_output(i, outputs_[i]);
    }
    return n;
  }

private:
  std::vector<InputRole> inputs_;
  std::vector<OutputRole> outputs_;
};

std::string q_name(std::size_t k)
{
  return "Q" + std::to_string(k);
}

SequentialCircuit build_async(std::size_t n)
{
  LinePlan plan;
  auto const clk = plan.add(InputRole::primary("CLK"), OutputRole::primary("CLK"));

  struct StageLines {
    std::size_t clock, t, q, out;
    std::optional<std::size_t> next_clock;
  };
  std::vector<StageLines> lines;
  auto clock = clk;
  for (std::size_t k = 0; k < n; ++k) {
    StageLines s{};
    s.clock = clock;
    s.t = plan.add(InputRole::constant(1), OutputRole::garbage());
    s.q = plan.add(InputRole::primary(q_name(k)), OutputRole::garbage());
    plan.set_output(s.q, OutputRole::feedback(s.q, 0));
    s.out = plan.add(InputRole::constant(0), OutputRole::primary(q_name(k)));
    if (k + 1 < n) {
      s.next_clock = plan.add(InputRole::constant(0), OutputRole::consumed());
      clock = *s.next_clock;
    }
    lines.push_back(s);
  }

  auto core = plan.netlist();
  std::vector<StageBinding> stages;
  for (std::size_t k = 0; k < n; ++k) {
    auto const& s = lines[k];
    auto const first = core.gates().size();
    core.add_gate("PG", {s.clock, s.t, s.q});
    if (s.next_clock) {
      core.add_gate("DFG", {s.q, s.out, *s.next_clock});
    } else {
      core.add_gate("FG", {s.q, s.out});
    }
    StageBinding b;
    b.index = k;
    b.q_feedback = k;
    if (k > 0) {
      b.clock_stage = k - 1;
      b.trigger = Edge::Falling;
    }
    b.first_gate = first;
    b.end_gate = core.gates().size();
    b.clock_line = s.clock;
    stages.push_back(b);
  }
  return SequentialCircuit(std::move(core), clk, std::move(stages));
}

SequentialCircuit build_sync(std::size_t n)
{
  LinePlan plan;
  auto const clk = plan.add(InputRole::primary("CLK"), OutputRole::primary("CLK"));

  std::vector<std::size_t> q(n), out(n);
  for (std::size_t k = 0; k < n; ++k) {
    q[k] = plan.add(InputRole::primary(q_name(k)), OutputRole::garbage());
    plan.set_output(q[k], OutputRole::feedback(q[k], 0));
    out[k] = plan.add(InputRole::constant(0), OutputRole::primary(q_name(k)));
  }

  // toggle[k]: line entering stage k's PG as T; its final value is garbage.
  // carry[k]: FG copy of toggle[k] kept for the next TG (k = 1 is the copy of out_0).
  std::vector<std::size_t> toggle(n);
  std::vector<std::optional<std::size_t>> carry(n);
  toggle[0] = plan.add(InputRole::constant(1), OutputRole::garbage());
  for (std::size_t k = 1; k < n; ++k) {
    toggle[k] = plan.add(InputRole::constant(0), OutputRole::garbage());
    if (k >= 2 && k + 2 <= n) {
      carry[k] = plan.add(InputRole::constant(0), OutputRole::consumed());
    }
  }

  auto core = plan.netlist();
  std::vector<StageBinding> stages;
  for (std::size_t k = 0; k < n; ++k) {
    auto const first = core.gates().size();
    if (k == 1) {
      core.add_gate("FG", {out[0], toggle[1]});
    } else if (k == 2) {
      core.add_gate("TG", {out[0], out[1], toggle[2]});
    } else if (k >= 3) {
      auto const lower = carry[k - 1] ? *carry[k - 1] : toggle[k - 1];
      core.add_gate("TG", {lower, out[k - 1], toggle[k]});
    }
    if (carry[k]) {
      core.add_gate("FG", {toggle[k], *carry[k]});
    }
    core.add_gate("PG", {clk, toggle[k], q[k]});
    core.add_gate("FG", {q[k], out[k]});

    StageBinding b;
    b.index = k;
    b.q_feedback = k;
    b.first_gate = first;
    b.end_gate = core.gates().size();
    b.clock_line = clk;
    stages.push_back(b);
  }
  return SequentialCircuit(std::move(core), clk, std::move(stages));
}

} // namespace

std::string_view to_string(CounterMode mode)
{
  return mode == CounterMode::Async ? "async" : "sync";
}

std::optional<CounterMode> parse_counter_mode(std::string_view text)
{
  if (text == "async") {
    return CounterMode::Async;
  }
  if (text == "sync") {
    return CounterMode::Sync;
  }
  return std::nullopt;
}

SequentialCircuit build_t_ff()
{
  Netlist core(2);
  core.set_input(0, InputRole::primary("T")).set_output(0, OutputRole::primary("T"));
  core.set_input(1, InputRole::primary("Q")).set_output(1, OutputRole::feedback(1, 0));
  core.add_gate("FG", {0, 1});

  StageBinding stage;
  stage.end_gate = 1;
  return SequentialCircuit(std::move(core), std::nullopt, {stage});
}

SequentialCircuit build_clocked_t_ff(ClockedVariant variant)
{
  Netlist core(4);
  core.set_input(0, InputRole::primary("CLK")).set_output(0, OutputRole::primary("CLK"));
  core.set_input(1, InputRole::primary("T")).set_output(1, OutputRole::garbage());
  core.set_input(2, InputRole::primary("Q")).set_output(2, OutputRole::feedback(2, 0));
  core.set_input(3, InputRole::constant(0))
    .set_output(3, OutputRole::primary(variant == ClockedVariant::A ? "Q" : "CLK_NEXT"));
  core.add_gate("PG", {0, 1, 2});
  core.add_gate("FG", {2, 3});

  StageBinding stage;
  stage.end_gate = 2;
  stage.clock_line = 0;
  return SequentialCircuit(std::move(core), 0, {stage});
}

SequentialCircuit build_ms_t_ff()
{
  Netlist core(5);
  core.set_input(0, InputRole::primary("CLK")).set_output(0, OutputRole::primary("CLK_N"));
  core.set_input(1, InputRole::primary("T")).set_output(1, OutputRole::garbage());
  core.set_input(2, InputRole::primary("M")).set_output(2, OutputRole::feedback(2, 0));
  core.set_input(3, InputRole::primary("Q")).set_output(3, OutputRole::feedback(3, 0));
  core.set_input(4, InputRole::constant(0)).set_output(4, OutputRole::garbage());
  // Master: M' = (CLK & T) ^ M, line 0 becomes !CLK.
  core.add_gate("MPG", {0, 1, 2});
  // Line 4 = M' ^ Q, then the slave loads it while !CLK is high: Q' = Q ^ (!CLK & (M' ^ Q)).
  core.add_gate("FG", {2, 4});
  core.add_gate("FG", {3, 4});
  core.add_gate("PG", {0, 4, 3});

  StageBinding stage;
  stage.q_feedback = 1;
  stage.end_gate = 4;
  stage.clock_line = 0;
  return SequentialCircuit(std::move(core), 0, {stage});
}

SequentialCircuit build_counter(CounterSpec const& spec)
{
  if (spec.bits < 1) {
    throw std::invalid_argument("counter needs at least 1 bit");
  }
  return spec.mode == CounterMode::Async ? build_async(spec.bits) : build_sync(spec.bits);
}

PredictedCost predict_cost(CounterSpec const& spec)
{
  auto const n = spec.bits;
  if (spec.mode == CounterMode::Async) {
    if (n < 1) {
      return {};
    }
    return {2 * n, n, 6 * n - 1, true};
  }
  if (n < 3) {
    return {};
  }
  return {4 * n - 4, n, 11 * n - 12, true};
}

} // namespace revcount
