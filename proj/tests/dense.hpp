#pragma once
// Small dense reference used only by the tests: gate matrices written out
// by hand, applied to a 2^k amplitude vector. Wire w is bit (k-1-w), so
// wire 0 is the most significant bit as in the 8x8 tables.
#include <cmath>
#include <complex>
#include <vector>

#include "qcla/circuit.hpp"

namespace dense {

using cd = std::complex<double>;
using Vec = std::vector<cd>;
using Mat = std::vector<std::vector<cd>>;

inline cd phase8(int k) { return std::polar(1.0, M_PI * k / 4.0); }

inline void apply1(Vec& v, int k, int w, const cd m[2][2]) {
  const std::size_t bitpos = static_cast<std::size_t>(k - 1 - w);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if ((i >> bitpos) & 1) continue;
    const std::size_t j = i | (std::size_t{1} << bitpos);
    const cd a = v[i], b = v[j];
    v[i] = m[0][0] * a + m[0][1] * b;
    v[j] = m[1][0] * a + m[1][1] * b;
  }
}

inline bool bit_of(std::size_t i, int k, int w) { return (i >> (k - 1 - w)) & 1; }

// Unitary primitive gates only.
inline void apply(Vec& v, int k, const qcla::Block& b) {
  using qcla::GateKind;
  const double r = 1 / std::sqrt(2.0);
  const int w0 = static_cast<int>(b.wires[0]);
  switch (b.kind) {
    case GateKind::X: { const cd m[2][2] = {{0, 1}, {1, 0}}; apply1(v, k, w0, m); return; }
    case GateKind::H: { const cd m[2][2] = {{r, r}, {r, -r}}; apply1(v, k, w0, m); return; }
    case GateKind::Z: { const cd m[2][2] = {{1, 0}, {0, -1}}; apply1(v, k, w0, m); return; }
    case GateKind::S: { const cd m[2][2] = {{1, 0}, {0, phase8(2)}}; apply1(v, k, w0, m); return; }
    case GateKind::Sdg: { const cd m[2][2] = {{1, 0}, {0, phase8(6)}}; apply1(v, k, w0, m); return; }
    case GateKind::T: { const cd m[2][2] = {{1, 0}, {0, phase8(1)}}; apply1(v, k, w0, m); return; }
    case GateKind::Tdg: { const cd m[2][2] = {{1, 0}, {0, phase8(7)}}; apply1(v, k, w0, m); return; }
    case GateKind::CNOT: {
      const int c = w0, t = static_cast<int>(b.wires[1]);
      Vec out(v.size());
      for (std::size_t i = 0; i < v.size(); ++i)
        out[bit_of(i, k, c) ? i ^ (std::size_t{1} << (k - 1 - t)) : i] = v[i];
      v = out;
      return;
    }
    case GateKind::CZ: {
      const int t = static_cast<int>(b.wires[1]);
      for (std::size_t i = 0; i < v.size(); ++i)
        if (bit_of(i, k, w0) && bit_of(i, k, t)) v[i] = -v[i];
      return;
    }
    default:
      throw std::invalid_argument("dense::apply: not a unitary primitive");
  }
}

// Column c of the result is the circuit applied to basis state c.
inline Mat unitary(const std::vector<qcla::Block>& gates, int k) {
  const std::size_t d = std::size_t{1} << k;
  Mat m(d, std::vector<cd>(d));
  for (std::size_t c = 0; c < d; ++c) {
    Vec v(d);
    v[c] = 1;
    for (const auto& g : gates) apply(v, k, g);
    for (std::size_t r = 0; r < d; ++r) m[r][c] = v[r];
  }
  return m;
}

}  // namespace dense
