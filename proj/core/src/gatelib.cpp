#include "revcount/gatelib.hpp"

#include <algorithm>
#include <array>
#include <complex>

namespace revcount {

namespace {

using P = QuantumPrimitive;
using K = PrimitiveKind;

// Builds the permutation table of a 3-line gate from a function on (a, b, c).
template<typename F>
std::vector<std::uint32_t> table3(F f)
{
  std::vector<std::uint32_t> t(8);
  for (std::uint32_t x = 0; x < 8; ++x) {
    auto const a = x & 1u, b = (x >> 1) & 1u, c = (x >> 2) & 1u;
    auto const [p, q, r] = f(a, b, c);
    t[x] = p | (q << 1) | (r << 2);
  }
  return t;
}

std::vector<GateDef> make_builtins()
{
  std::vector<GateDef> gates;

  gates.emplace_back("NOT", 1, std::vector<std::uint32_t>{1, 0}, 1,
                     std::vector<P>{{K::Not, 0, std::nullopt}});

  // (A, B) -> (A, A ^ B)
  gates.emplace_back("FG", 2, std::vector<std::uint32_t>{0, 3, 2, 1}, 1,
                     std::vector<P>{{K::Cnot, 1, 0}});

  gates.emplace_back("DFG", 3,
                     table3([](auto a, auto b, auto c) { return std::array{a, a ^ b, a ^ c}; }), 2,
                     std::vector<P>{{K::Cnot, 1, 0}, {K::Cnot, 2, 0}});

  // V exponent on C: a + b - (a ^ b) = 2ab.
  gates.emplace_back("PG", 3,
                     table3([](auto a, auto b, auto c) { return std::array{a, a ^ b, (a & b) ^ c}; }), 4,
                     std::vector<P>{{K::CtrlV, 2, 0}, {K::CtrlV, 2, 1}, {K::Cnot, 1, 0}, {K::CtrlVDag, 2, 1}});

  gates.emplace_back("MPG", 3,
                     table3([](auto a, auto b, auto c) { return std::array{a ^ 1u, a ^ b, (a & b) ^ c}; }), 4,
                     std::vector<P>{{K::CtrlV, 2, 0}, {K::CtrlV, 2, 1}, {K::CnotNot, 1, 0}, {K::CtrlVDag, 2, 1}});

  // V exponent on C: b - (a ^ b) + a = 2ab; B is restored by the second CNOT.
  gates.emplace_back("TG", 3,
                     table3([](auto a, auto b, auto c) { return std::array{a, b, (a & b) ^ c}; }), 5,
                     std::vector<P>{{K::CtrlV, 2, 1},
                                    {K::Cnot, 1, 0},
                                    {K::CtrlVDag, 2, 1},
                                    {K::Cnot, 1, 0},
                                    {K::CtrlV, 2, 0}});
  return gates;
}

} // namespace

std::string_view to_string(PrimitiveKind kind)
{
  switch (kind) {
  case K::Not: return "NOT";
  case K::Cnot: return "CNOT";
  case K::CtrlV: return "CV";
  case K::CtrlVDag: return "CV+";
  case K::CnotNot: return "CNOT-NOT";
  }
  return "?";
}

GateDef::GateDef(std::string name, std::size_t arity, std::vector<std::uint32_t> permutation,
                 std::size_t quantum_cost, std::vector<QuantumPrimitive> decomposition)
  : name_(std::move(name))
  , arity_(arity)
  , permutation_(std::move(permutation))
  , inverse_(permutation_.size())
  , quantum_cost_(quantum_cost)
  , decomposition_(std::move(decomposition))
{
  if (arity_ < 1 || arity_ > 3) {
    throw std::invalid_argument("gate " + name_ + ": arity must be 1..3");
  }
  auto const size = std::size_t{1} << arity_;
  if (permutation_.size() != size) {
    throw std::invalid_argument("gate " + name_ + ": permutation needs 2^arity entries");
  }
  std::vector<bool> seen(size, false);
  for (std::uint32_t x = 0; x < size; ++x) {
    auto const y = permutation_[x];
    if (y >= size || seen[y]) {
      throw std::invalid_argument("gate " + name_ + ": permutation is not a bijection");
    }
    seen[y] = true;
    inverse_[y] = x;
  }
  for (auto const& p : decomposition_) {
    bool const needs_control = p.kind != K::Not;
    if (p.target >= arity_ || needs_control != p.control.has_value() ||
        (p.control && (*p.control >= arity_ || *p.control == p.target))) {
      throw std::invalid_argument("gate " + name_ + ": malformed decomposition primitive");
    }
  }
}

std::span<const GateDef> builtin_gates()
{
  static std::vector<GateDef> const gates = make_builtins();
  return gates;
}

GateDef const* find_gate(std::string_view name)
{
  auto const gates = builtin_gates();
  auto it = std::find_if(gates.begin(), gates.end(), [&](auto const& g) { return g.name() == name; });
  return it == gates.end() ? nullptr : &*it;
}

GateDef const& gate(std::string_view name)
{
  if (auto const* g = find_gate(name)) {
    return *g;
  }
  throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

std::uint32_t pack_pattern(std::span<const std::uint8_t> bits)
{
  std::uint32_t x = 0;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    x |= static_cast<std::uint32_t>(bits[j] & 1u) << j;
  }
  return x;
}

Bits unpack_pattern(std::uint32_t pattern, std::size_t width)
{
  Bits bits(width);
  for (std::size_t j = 0; j < width; ++j) {
    bits[j] = (pattern >> j) & 1u;
  }
  return bits;
}

Bits apply_gate(GateDef const& g, std::span<const std::uint8_t> input)
{
  if (input.size() != g.arity()) {
    throw ArityError("gate " + g.name() + " expects " + std::to_string(g.arity()) + " bits, got " +
                     std::to_string(input.size()));
  }
  return unpack_pattern(g.map(pack_pattern(input)), g.arity());
}

Bits apply_inverse(GateDef const& g, std::span<const std::uint8_t> output)
{
  if (output.size() != g.arity()) {
    throw ArityError("gate " + g.name() + " expects " + std::to_string(g.arity()) + " bits, got " +
                     std::to_string(output.size()));
  }
  return unpack_pattern(g.inverse_map(pack_pattern(output)), g.arity());
}

Eigen::Matrix2cd sqrt_not()
{
  using C = std::complex<double>;
  Eigen::Matrix2cd v;
  v << C(0.5, 0.5), C(0.5, -0.5), C(0.5, -0.5), C(0.5, 0.5);
  return v;
}

Eigen::MatrixXcd primitive_matrix(QuantumPrimitive const& p, std::size_t lines)
{
  auto const dim = Eigen::Index{1} << lines;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  auto const tbit = Eigen::Index{1} << p.target;

  Eigen::Matrix2cd u;
  switch (p.kind) {
  case K::Not:
  case K::Cnot:
  case K::CnotNot: u << 0, 1, 1, 0; break;
  case K::CtrlV: u = sqrt_not(); break;
  case K::CtrlVDag: u = sqrt_not().adjoint(); break;
  }

  for (Eigen::Index x = 0; x < dim; ++x) {
    bool const active = !p.control || ((x >> *p.control) & 1);
    if (!active) {
      auto const y = p.kind == K::CnotNot ? (x ^ (Eigen::Index{1} << *p.control)) : x;
      m(y, x) = 1.0;
      continue;
    }
    auto const b = (x & tbit) ? 1 : 0;
    for (int nb = 0; nb < 2; ++nb) {
      auto y = nb ? (x | tbit) : (x & ~tbit);
      if (p.kind == K::CnotNot) {
        y ^= Eigen::Index{1} << *p.control;
      }
      m(y, x) += u(nb, b);
    }
  }
  return m;
}

Eigen::MatrixXcd decomposition_unitary(GateDef const& g)
{
  auto const dim = Eigen::Index{1} << g.arity();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (auto const& p : g.decomposition()) {
    u = primitive_matrix(p, g.arity()) * u;
  }
  return u;
}

Eigen::MatrixXcd permutation_matrix(GateDef const& g)
{
  auto const dim = Eigen::Index{1} << g.arity();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    m(g.map(static_cast<std::uint32_t>(x)), x) = 1.0;
  }
  return m;
}

} // namespace revcount
