#pragma once

// Reference computations used by the tests. Nothing here calls into the
// library's gate tables, simulator or matrix code.

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

// Counter value after t pulses, as a MSB-left string of n bits.
inline std::string count_string(std::uint64_t t, std::size_t n)
{
  auto const v = t % (std::uint64_t{1} << n);
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    if ((v >> i) & 1u) {
      s[n - 1 - i] = '1';
    }
  }
  return s;
}

// Gate functions written out from their textbook definitions, (a, b, c) -> outputs.
using Triple = std::array<int, 3>;

inline Triple fg(int a, int b) { return {a, a ^ b, 0}; }
inline Triple dfg(int a, int b, int c) { return {a, a ^ b, a ^ c}; }
inline Triple pg(int a, int b, int c) { return {a, a ^ b, (a & b) ^ c}; }
inline Triple mpg(int a, int b, int c) { return {1 - a, a ^ b, (a & b) ^ c}; }
inline Triple tg(int a, int b, int c) { return {a, b, (a & b) ^ c}; }

// Minimal dense complex matrices for the 3-qubit decomposition check.
using C = std::complex<double>;
using M8 = std::array<std::array<C, 8>, 8>;

inline M8 identity8()
{
  M8 m{};
  for (int i = 0; i < 8; ++i) {
    m[i][i] = 1.0;
  }
  return m;
}

inline M8 mul(M8 const& a, M8 const& b)
{
  M8 r{};
  for (int i = 0; i < 8; ++i) {
    for (int k = 0; k < 8; ++k) {
      for (int j = 0; j < 8; ++j) {
        r[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return r;
}

// Controlled 2x2 unitary `u` on qubit `target` with control `control` (basis bit q = qubit q).
inline M8 controlled(std::array<std::array<C, 2>, 2> const& u, int control, int target)
{
  M8 m{};
  for (int x = 0; x < 8; ++x) {
    if (!((x >> control) & 1)) {
      m[x][x] = 1.0;
      continue;
    }
    int const b = (x >> target) & 1;
    for (int nb = 0; nb < 2; ++nb) {
      int const y = nb ? (x | (1 << target)) : (x & ~(1 << target));
      m[y][x] += u[nb][b];
    }
  }
  return m;
}

inline std::array<std::array<C, 2>, 2> v_gate()
{
  return {{{C(0.5, 0.5), C(0.5, -0.5)}, {C(0.5, -0.5), C(0.5, 0.5)}}};
}

inline std::array<std::array<C, 2>, 2> v_dagger()
{
  auto v = v_gate();
  return {{{std::conj(v[0][0]), std::conj(v[1][0])}, {std::conj(v[0][1]), std::conj(v[1][1])}}};
}

inline std::array<std::array<C, 2>, 2> x_gate()
{
  return {{{0.0, 1.0}, {1.0, 0.0}}};
}

template<typename F>
M8 permutation8(F f)
{
  M8 m{};
  for (int x = 0; x < 8; ++x) {
    auto const o = f(x & 1, (x >> 1) & 1, (x >> 2) & 1);
    m[o[0] | (o[1] << 1) | (o[2] << 2)][x] = 1.0;
  }
  return m;
}

inline double distance(M8 const& a, M8 const& b)
{
  double d = 0.0;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      d = std::max(d, std::abs(a[i][j] - b[i][j]));
    }
  }
  return d;
}

} // namespace oracle
