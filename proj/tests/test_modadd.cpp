#include <gtest/gtest.h>

#include "qcla/modadd.hpp"
#include "qcla/sim.hpp"

using namespace qcla;

namespace {

const ModAddInstance kExample{6, 59, 37};

SimState run_with(const Circuit& c, bool ctrl, bool comp, std::uint64_t b) {
  std::vector<std::uint8_t> bits(c.num_wires(), 0);
  bits[c.wire(Role::Ctrl, 0)] = ctrl;
  bits[c.wire(Role::Comp, 0)] = comp;
  set_register(bits, c.reg(Role::B), b);
  return run_monomial(c, bits, 5);
}

}  // namespace

TEST(ModAddInstance, Validation) {
  EXPECT_NO_THROW(kExample.validate());
  EXPECT_THROW((ModAddInstance{6, 64, 1}.validate()), std::invalid_argument);
  EXPECT_THROW((ModAddInstance{6, 59, 59}.validate()), std::invalid_argument);
  EXPECT_EQ(kExample.sub_value(), BigUInt(42));
}

TEST(Comparators, FirstFlipsWhenAtLeastNMinusA) {
  const Circuit c = synth_c_comparator(kExample, Which::First);
  for (int x = 0; x <= 1; ++x)
    for (std::uint64_t b = 0; b < 64; ++b) {
      const SimState s = run_with(c, x, false, b);
      EXPECT_EQ(s.bits[c.wire(Role::Comp, 0)], x && b >= 22) << x << " " << b;
      EXPECT_EQ(s.phase_exp, 0);
    }
}

TEST(Comparators, LastFlipsWhenBelowA) {
  const Circuit c = synth_c_comparator(kExample, Which::Last);
  for (int x = 0; x <= 1; ++x)
    for (std::uint64_t b = 0; b < 64; ++b) {
      const SimState s = run_with(c, x, false, b);
      EXPECT_EQ(s.bits[c.wire(Role::Comp, 0)], x && b < 37) << x << " " << b;
    }
}

TEST(Embed, LoadsAddendForComparisonResult) {
  const Circuit c = synth_embed(kExample, Direction::Embed);
  EXPECT_EQ(get_register(run_with(c, true, true, 0).bits, c.reg(Role::D)), BigUInt(42));
  EXPECT_EQ(get_register(run_with(c, true, false, 0).bits, c.reg(Role::D)), BigUInt(37));
  EXPECT_EQ(get_register(run_with(c, false, true, 0).bits, c.reg(Role::D)), BigUInt(0));
  EXPECT_EQ(get_register(run_with(c, false, false, 0).bits, c.reg(Role::D)), BigUInt(0));
}

TEST(Embed, ResetUndoesEmbed) {
  Circuit c = synth_embed(kExample, Direction::Embed);
  c.append(synth_embed(kExample, Direction::Reset));
  for (int x = 0; x <= 1; ++x)
    for (int comp = 0; comp <= 1; ++comp)
      EXPECT_EQ(get_register(run_with(c, x, comp, 0).bits, c.reg(Role::D)), BigUInt(0));
}

TEST(EmbedPlan, ClassesFollowBits) {
  const EmbedPlan p = EmbedPlan::from(kExample);
  ASSERT_EQ(p.classes.size(), 6u);
  // a = 100101, sub = 101010
  EXPECT_EQ(p.classes[0], BitClass::OnlyAdd);
  EXPECT_EQ(p.classes[1], BitClass::OnlySub);
  EXPECT_EQ(p.classes[2], BitClass::OnlyAdd);
  EXPECT_EQ(p.classes[3], BitClass::OnlySub);
  EXPECT_EQ(p.classes[4], BitClass::Neither);
  EXPECT_EQ(p.classes[5], BitClass::Both);
  EXPECT_EQ(p.members(BitClass::Neither), std::vector<int>{4});
}

TEST(EmbedPlan, NeitherClassAveragesQuarter) {
  std::mt19937_64 rng(2024);
  const int n = 64, trials = 400;
  double total = 0;
  for (int i = 0; i < trials; ++i)
    total += static_cast<double>(EmbedPlan::from(random_instance(n, rng)).members(BitClass::Neither).size());
  EXPECT_NEAR(total / trials / n, 0.25, 0.02);
}

TEST(CcAdder, AddsSelectedValue) {
  const Circuit c = synth_cc_adder(kExample);
  EXPECT_EQ(get_register(run_with(c, true, true, 30).bits, c.reg(Role::B)), BigUInt(8));
  EXPECT_EQ(get_register(run_with(c, true, false, 3).bits, c.reg(Role::B)), BigUInt(40));
  EXPECT_EQ(get_register(run_with(c, false, true, 17).bits, c.reg(Role::B)), BigUInt(17));
}

TEST(ModAdd, WorkedExampleN59A37) {
  const Circuit c = synth_modadd(kExample);
  const SimState s = run_monomial(c, modadd_input(c, true, 30), 1);
  EXPECT_EQ(get_register(s.bits, c.reg(Role::B)), BigUInt(8));
  EXPECT_EQ(s.phase_exp, 0);
}

TEST(ModAdd, ZeroAddend) {
  const ModAddInstance inst{5, 19, 0};
  const Circuit c = synth_modadd(inst);
  const SimState s = run_monomial(c, modadd_input(c, true, 0), 1);
  EXPECT_EQ(get_register(s.bits, c.reg(Role::B)), BigUInt(0));
}

TEST(ModAdd, ExhaustiveFourBitsBlockLevel) {
  for (int N = 9; N < 16; ++N)
    for (int a = 0; a < N; ++a) {
      const ModAddInstance inst{4, N, a};
      const Verdict v = verify_circuit(synth_modadd(inst), inst, VerifyMode::all(), 7);
      ASSERT_TRUE(v.passed) << "N=" << N << " a=" << a << " " << v.failure->reason;
    }
}

TEST(ModAdd, LayoutHasFourNPlusTwoWires) {
  for (int n : {1, 5, 17}) EXPECT_EQ(modadd_layout(n).num_wires(), std::size_t(4 * n + 2));
}

TEST(RandomInstance, Ranges) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const ModAddInstance inst = random_instance(10, rng);
    EXPECT_GE(inst.N, BigUInt(512));
    EXPECT_LT(inst.N, BigUInt(1024));
    EXPECT_LT(inst.a, inst.N);
  }
}
