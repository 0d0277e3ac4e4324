#include <gtest/gtest.h>

#include "qcla/modadd.hpp"
#include "qcla/sim.hpp"
#include "qcla/strategy.hpp"

using namespace qcla;

namespace {

Circuit three_wires() {
  Circuit c(1);
  c.add_register(Role::Ancilla, 3);
  return c;
}

SimState one_toffoli(Variant v, std::vector<std::uint8_t> in) {
  Circuit c = three_wires();
  Block b;
  b.kind = GateKind::Toffoli;
  b.variant = v;
  b.nwires = 3;
  b.wires = {0, 1, 2};
  c.append(b);
  return run_monomial(c, std::move(in), 0);
}

}  // namespace

TEST(Monomial, ToffoliTruthTable) {
  const SimState s = one_toffoli(Variant::ST, {1, 1, 0});
  EXPECT_EQ(s.bits, (std::vector<std::uint8_t>{1, 1, 1}));
  EXPECT_EQ(s.phase_exp, 0);
}

TEST(Monomial, GrtOnOneOneZero) {
  // The published table sends |110> to |111> with amplitude 1; the -i sits
  // on |111> -> |110>.
  SimState s = one_toffoli(Variant::GRT, {1, 1, 0});
  EXPECT_EQ(s.bits, (std::vector<std::uint8_t>{1, 1, 1}));
  EXPECT_EQ(s.phase_exp, 0);
  s = one_toffoli(Variant::GRT, {1, 1, 1});
  EXPECT_EQ(s.bits, (std::vector<std::uint8_t>{1, 1, 0}));
  EXPECT_EQ(s.phase_exp, 6);
}

TEST(Monomial, SingleBlockMatchesMatrix) {
  for (Variant v : {Variant::ST, Variant::GRT, Variant::IGRT, Variant::RT3, Variant::IRT3,
                    Variant::RT4, Variant::IRT4}) {
    const MonomialMatrix m = variant_matrix(v);
    for (int in = 0; in < 8; ++in) {
      const SimState s = one_toffoli(v, {std::uint8_t(in >> 2 & 1), std::uint8_t(in >> 1 & 1),
                                         std::uint8_t(in & 1)});
      const int out = s.bits[0] * 4 + s.bits[1] * 2 + s.bits[2];
      EXPECT_EQ(out, m.image[in]) << to_string(v);
      EXPECT_EQ(s.phase_exp, m.phase[in]) << to_string(v);
    }
  }
}

TEST(Monomial, RejectsBareHadamard) {
  Circuit c = three_wires();
  CircuitBuilder(c).gate1(GateKind::H, 0);
  EXPECT_THROW(run_monomial(c, {0, 0, 0}, 0), std::invalid_argument);
}

TEST(Monomial, SeedIndependentExample) {
  const ModAddInstance inst{6, 59, 37};
  for (Strategy s : {Strategy::OursFTQ, Strategy::OursNISQ}) {
    const Circuit c = assign(synth_modadd(inst), s, UncomputeMode::Measurement);
    const SimState first = run_monomial(c, modadd_input(c, true, 30), 0);
    EXPECT_EQ(get_register(first.bits, c.reg(Role::B)), BigUInt(8));
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const SimState s2 = run_monomial(c, modadd_input(c, true, 30), seed);
      ASSERT_EQ(s2.bits, first.bits);
      ASSERT_EQ(s2.phase_exp, 0);
    }
  }
}

TEST(Statevector, HadamardInvolution) {
  Circuit c(1);
  c.add_register(Role::Ancilla, 1);
  CircuitBuilder out(c);
  out.gate1(GateKind::H, 0);
  out.gate1(GateKind::H, 0);
  const Amplitudes v = run_statevector(c, basis_state(1, {0}), 0);
  EXPECT_NEAR(std::abs(v[0] - 1.0), 0, 1e-12);
  EXPECT_NEAR(std::abs(v[1]), 0, 1e-12);
}

TEST(Statevector, WireBudget) {
  Circuit c(1);
  c.add_register(Role::Ancilla, 21);
  EXPECT_THROW(run_statevector(c, Amplitudes(2), 0), std::invalid_argument);
}

// Lowered primitive circuit on the dense engine against the block level on
// the monomial engine, every valid input, n = 2.
TEST(Statevector, CrossEngineTwoBits) {
  for (int N = 2; N < 4; ++N)
    for (int a = 0; a < N; ++a) {
      const ModAddInstance inst{2, N, a};
      const Circuit block = synth_modadd(inst);
      for (Strategy s : {Strategy::DraperST, Strategy::ThapliyalQubitOpt, Strategy::ThapliyalTOpt,
                         Strategy::OursFTQ, Strategy::OursNISQ}) {
        const Circuit prim = lower(block, s);
        for (int x = 0; x <= 1; ++x)
          for (int b = 0; b < N; ++b) {
            const SimState want = run_monomial(block, modadd_input(block, x, b), 1);
            std::vector<std::uint8_t> in = modadd_input(prim, x, b);
            const Amplitudes out = run_statevector(prim, basis_state(prim.num_wires(), in), 1);
            std::vector<std::uint8_t> expect_bits = want.bits;
            expect_bits.resize(prim.num_wires(), 0);
            const std::uint64_t idx = basis_index(expect_bits);
            ASSERT_NEAR(std::abs(out[idx] - std::polar(1.0, M_PI * want.phase_exp / 4)), 0, 1e-9)
                << to_string(s) << " N=" << N << " a=" << a << " x=" << x << " b=" << b;
          }
      }
    }
}

TEST(Verify, DetectsDroppedCnot) {
  const ModAddInstance inst{4, 14, 11};
  Circuit c = synth_modadd(inst);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i].kind == GateKind::CNOT) {
      c.erase_block(i);
      break;
    }
  const Verdict v = verify_circuit(c, inst, VerifyMode::all(), 1);
  EXPECT_FALSE(v.passed);
  ASSERT_TRUE(v.failure.has_value());
  EXPECT_FALSE(v.failure->reason.empty());
}

TEST(Verify, SampledRecordsSeed) {
  const Verdict v = verify_functional({8, 201, 77}, Strategy::OursNISQ, VerifyMode::sampled(200), 42);
  EXPECT_TRUE(v.passed);
  EXPECT_EQ(v.cases, 200);
  EXPECT_EQ(v.seed, 42u);
  EXPECT_EQ(v.rng, "mt19937_64");
}
