#include "qcla/sim.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "qcla/strategy.hpp"

namespace qcla {

namespace {

const std::array<MonomialMatrix, 10>& matrices() {
  static const std::array<MonomialMatrix, 10> m = [] {
    std::array<MonomialMatrix, 10> r{};
    for (int v = 0; v < 10; ++v) {
      const auto var = static_cast<Variant>(v);
      if (var == Variant::PGRTFirst || var == Variant::PGRTSecond) continue;
      r[v] = variant_matrix(var);
    }
    return r;
  }();
  return m;
}

std::uint8_t phase_of(GateKind k) {
  switch (k) {
    case GateKind::Z: return 4;
    case GateKind::S: return 2;
    case GateKind::Sdg: return 6;
    case GateKind::T: return 1;
    case GateKind::Tdg: return 7;
    default: return 0;
  }
}

}  // namespace

SimState run_monomial(const Circuit& c, std::vector<std::uint8_t> input, std::uint64_t seed) {
  if (input.size() != c.num_wires()) throw std::invalid_argument("input size != wire count");
  std::mt19937_64 rng(seed);
  SimState s;
  s.bits = std::move(input);
  s.cbits.assign(static_cast<std::size_t>(c.num_cbits()), 0);
  unsigned phase = 0;
  auto& bits = s.bits;
  const auto& blocks = c.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Block& b = blocks[i];
    if (b.condition >= 0 && !s.cbits[b.condition]) continue;
    const auto w0 = b.wires[0], w1 = b.wires[1], w2 = b.wires[2];
    switch (b.kind) {
      case GateKind::X:
        bits[w0] ^= 1;
        break;
      case GateKind::Z:
      case GateKind::S:
      case GateKind::Sdg:
      case GateKind::T:
      case GateKind::Tdg:
        if (bits[w0]) phase += phase_of(b.kind);
        break;
      case GateKind::CNOT:
        bits[w1] ^= bits[w0];
        break;
      case GateKind::CZ:
        if (bits[w0] && bits[w1]) phase += 4;
        break;
      case GateKind::Toffoli: {
        const auto& m = matrices()[static_cast<int>(b.variant)];
        if (b.variant == Variant::PGRTFirst || b.variant == Variant::PGRTSecond)
          throw std::invalid_argument("run_monomial: PGRT halves must be lowered first");
        const unsigned idx = 4u * bits[w0] + 2u * bits[w1] + bits[w2];
        const unsigned out = m.image[idx];
        phase += m.phase[idx];
        bits[w0] = (out >> 2) & 1;
        bits[w1] = (out >> 1) & 1;
        bits[w2] = out & 1;
        break;
      }
      case GateKind::H: {
        if (i + 1 >= blocks.size() || blocks[i + 1].kind != GateKind::MeasureXUncompute ||
            blocks[i + 1].wires[0] != w0 || blocks[i + 1].condition >= 0)
          throw std::invalid_argument("run_monomial: H outside the measured-uncompute pattern");
        const Block& m = blocks[i + 1];
        const std::uint8_t out = rng() & 1;
        if (out && bits[w0]) phase += 4;
        s.cbits[m.cbit] = out;
        bits[w0] = 0;
        ++i;
        break;
      }
      case GateKind::MeasureXUncompute:
        rng();
        s.cbits[b.cbit] = bits[w0];
        bits[w0] = 0;
        break;
      case GateKind::MeasureZ:
        rng();
        s.cbits[b.cbit] = bits[w0];
        break;
      case GateKind::MeasureX:
        throw std::invalid_argument("run_monomial: X-basis measurement is not monomial");
    }
  }
  s.phase_exp = static_cast<std::uint8_t>(phase % 8);
  return s;
}

std::uint64_t basis_index(const std::vector<std::uint8_t>& bits) {
  if (bits.size() > 63) throw std::invalid_argument("basis_index: too many wires");
  std::uint64_t idx = 0;
  for (std::size_t w = 0; w < bits.size(); ++w)
    if (bits[w]) idx |= std::uint64_t{1} << w;
  return idx;
}

Amplitudes basis_state(std::size_t num_wires, const std::vector<std::uint8_t>& bits) {
  if (num_wires > kMaxStatevectorWires) throw std::invalid_argument("statevector wire budget");
  if (bits.size() != num_wires) throw std::invalid_argument("basis_state: size mismatch");
  Amplitudes v(std::size_t{1} << num_wires);
  v[basis_index(bits)] = 1.0;
  return v;
}

namespace {

using cd = std::complex<double>;

std::uint8_t measure(Amplitudes& v, std::uint64_t mask, std::mt19937_64& rng, bool reset) {
  double p1 = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i & mask) p1 += std::norm(v[i]);
  std::uint8_t m = rng() & 1;
  const double pm = m ? p1 : 1.0 - p1;
  if (pm < 1e-12) m ^= 1;
  const double norm = 1.0 / std::sqrt(m ? p1 : 1.0 - p1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const bool one = (i & mask) != 0;
    if (one != static_cast<bool>(m)) v[i] = 0;
    else v[i] *= norm;
  }
  if (reset && m)
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i & mask) {
        v[i ^ mask] = v[i];
        v[i] = 0;
      }
  return m;
}

void apply_h(Amplitudes& v, std::uint64_t mask) {
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(i & mask)) {
      const cd a = v[i], b = v[i | mask];
      v[i] = (a + b) * r;
      v[i | mask] = (a - b) * r;
    }
}

}  // namespace

Amplitudes run_statevector(const Circuit& c, const Amplitudes& input, std::uint64_t seed,
                           std::vector<std::uint8_t>* cbits_out) {
  if (c.num_wires() > kMaxStatevectorWires)
    throw std::invalid_argument("run_statevector: more than 20 wires");
  if (input.size() != (std::size_t{1} << c.num_wires()))
    throw std::invalid_argument("run_statevector: input size mismatch");
  std::mt19937_64 rng(seed);
  Amplitudes v = input;
  std::vector<std::uint8_t> cbits(static_cast<std::size_t>(c.num_cbits()), 0);
  const cd phases[8] = {std::polar(1.0, 0.0),         std::polar(1.0, M_PI / 4),
                        std::polar(1.0, M_PI / 2),    std::polar(1.0, 3 * M_PI / 4),
                        std::polar(1.0, M_PI),        std::polar(1.0, 5 * M_PI / 4),
                        std::polar(1.0, 3 * M_PI / 2), std::polar(1.0, 7 * M_PI / 4)};
  const std::size_t size = v.size();
  for (const Block& b : c.blocks()) {
    if (b.condition >= 0 && !cbits[b.condition]) continue;
    const std::uint64_t m0 = std::uint64_t{1} << b.wires[0];
    const std::uint64_t m1 = b.nwires > 1 ? std::uint64_t{1} << b.wires[1] : 0;
    const std::uint64_t m2 = b.nwires > 2 ? std::uint64_t{1} << b.wires[2] : 0;
    switch (b.kind) {
      case GateKind::X:
        for (std::size_t i = 0; i < size; ++i)
          if (!(i & m0)) std::swap(v[i], v[i | m0]);
        break;
      case GateKind::H:
        apply_h(v, m0);
        break;
      case GateKind::Z:
      case GateKind::S:
      case GateKind::Sdg:
      case GateKind::T:
      case GateKind::Tdg: {
        const cd f = phases[phase_of(b.kind)];
        for (std::size_t i = 0; i < size; ++i)
          if (i & m0) v[i] *= f;
        break;
      }
      case GateKind::CNOT:
        for (std::size_t i = 0; i < size; ++i)
          if ((i & m0) && !(i & m1)) std::swap(v[i], v[i | m1]);
        break;
      case GateKind::CZ:
        for (std::size_t i = 0; i < size; ++i)
          if ((i & m0) && (i & m1)) v[i] = -v[i];
        break;
      case GateKind::Toffoli: {
        if (b.variant == Variant::PGRTFirst || b.variant == Variant::PGRTSecond)
          throw std::invalid_argument("run_statevector: PGRT halves must be lowered first");
        const auto& mm = matrices()[static_cast<int>(b.variant)];
        const std::uint64_t all = m0 | m1 | m2;
        for (std::size_t base = 0; base < size; ++base) {
          if (base & all) continue;
          std::array<cd, 8> in{}, out{};
          for (unsigned k = 0; k < 8; ++k)
            in[k] = v[base | ((k & 4) ? m0 : 0) | ((k & 2) ? m1 : 0) | ((k & 1) ? m2 : 0)];
          for (unsigned k = 0; k < 8; ++k) out[mm.image[k]] += in[k] * phases[mm.phase[k]];
          for (unsigned k = 0; k < 8; ++k)
            v[base | ((k & 4) ? m0 : 0) | ((k & 2) ? m1 : 0) | ((k & 1) ? m2 : 0)] = out[k];
        }
        break;
      }
      case GateKind::MeasureXUncompute:
        cbits[b.cbit] = measure(v, m0, rng, true);
        break;
      case GateKind::MeasureZ:
        cbits[b.cbit] = measure(v, m0, rng, false);
        break;
      case GateKind::MeasureX:
        apply_h(v, m0);
        cbits[b.cbit] = measure(v, m0, rng, false);
        apply_h(v, m0);
        break;
    }
  }
  if (cbits_out) *cbits_out = std::move(cbits);
  return v;
}

void set_register(std::vector<std::uint8_t>& bits, const RegisterSpan& r, const BigUInt& v) {
  for (std::uint32_t i = 0; i < r.size; ++i) bits[r[i]] = bit(v, static_cast<int>(i)) ? 1 : 0;
}

BigUInt get_register(const std::vector<std::uint8_t>& bits, const RegisterSpan& r) {
  BigUInt v = 0;
  for (std::uint32_t i = r.size; i-- > 0;) {
    v <<= 1;
    if (bits[r[i]]) v |= 1;
  }
  return v;
}

std::vector<std::uint8_t> modadd_input(const Circuit& c, bool x, const BigUInt& b) {
  std::vector<std::uint8_t> bits(c.num_wires(), 0);
  bits[c.wire(Role::Ctrl, 0)] = x ? 1 : 0;
  set_register(bits, c.reg(Role::B), b);
  return bits;
}

namespace {

std::uint64_t case_seed(std::uint64_t seed, std::int64_t k) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::optional<Counterexample> check_case(const Circuit& c, const ModAddInstance& inst, bool x,
                                         const BigUInt& b, std::uint64_t seed) {
  const SimState s = run_monomial(c, modadd_input(c, x, b), seed);
  Counterexample ce;
  ce.x = x;
  ce.b = b;
  ce.expected = x ? BigUInt((b + inst.a) % inst.N) : b;
  ce.got = get_register(s.bits, c.reg(Role::B));
  ce.phase_exp = s.phase_exp;
  for (const auto& r : c.registers()) {
    if (r.role == Role::B) continue;
    for (std::uint32_t i = 0; i < r.size; ++i) {
      const bool expect = r.role == Role::Ctrl && x;
      if (static_cast<bool>(s.bits[r[i]]) != expect) {
        if (r.role == Role::Ctrl) ce.ctrl_intact = false;
        else ce.ancillas_clean = false;
      }
    }
  }
  if (ce.got != ce.expected) ce.reason = "wrong sum";
  else if (!ce.ctrl_intact) ce.reason = "control changed";
  else if (!ce.ancillas_clean) ce.reason = "ancilla not restored";
  else if (ce.phase_exp != 0) ce.reason = "nonzero phase";
  else return std::nullopt;
  return ce;
}

}  // namespace

Verdict verify_circuit(const Circuit& c, const ModAddInstance& inst, VerifyMode mode,
                       std::uint64_t seed) {
  inst.validate();
  Verdict v;
  v.seed = seed;
  auto record = [&](std::optional<Counterexample> ce) {
    ++v.cases;
    if (ce && v.passed) {
      v.passed = false;
      v.failure = std::move(ce);
    }
    return v.passed;
  };
  if (mode.exhaustive) {
    if (inst.N > BigUInt(1) << 24) throw std::invalid_argument("exhaustive verify: N too large");
    const auto N = static_cast<std::uint64_t>(inst.N);
    std::int64_t k = 0;
    for (int x = 0; x <= 1; ++x)
      for (std::uint64_t b = 0; b < N; ++b, ++k)
        if (!record(check_case(c, inst, x != 0, b, case_seed(seed, k)))) return v;
    return v;
  }
  std::mt19937_64 rng(seed);
  for (std::int64_t k = 0; k < mode.samples; ++k) {
    const bool x = rng() & 1;
    const BigUInt b = uniform_below(rng, inst.N);
    if (!record(check_case(c, inst, x, b, case_seed(seed, k)))) return v;
  }
  return v;
}

Verdict verify_functional(const ModAddInstance& inst, Strategy strategy, VerifyMode mode,
                          std::uint64_t seed, UncomputeMode uncompute) {
  const Circuit block = synth_modadd(inst);
  const Circuit assigned = assign(block, strategy, uncompute);
  return verify_circuit(assigned, inst, mode, seed);
}

}  // namespace qcla
