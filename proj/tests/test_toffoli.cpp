#include <gtest/gtest.h>

#include <map>

#include "dense.hpp"
#include "qcla/sim.hpp"
#include "qcla/toffoli.hpp"

using namespace qcla;
using dense::cd;

namespace {

// Published 8x8 tables, entry (row, column). Everything else is identity
// on the diagonal unless listed.
dense::Mat table(const std::map<std::pair<int, int>, cd>& entries,
                 std::initializer_list<int> moved) {
  dense::Mat m(8, std::vector<cd>(8));
  for (int i = 0; i < 8; ++i) m[i][i] = 1;
  for (int c : moved) m[c][c] = 0;
  for (const auto& [rc, v] : entries) m[rc.first][rc.second] = v;
  return m;
}

const cd I{0, 1};

dense::Mat ideal_toffoli() { return table({{{7, 6}, 1}, {{6, 7}, 1}}, {6, 7}); }
dense::Mat grt_table() {
  return table({{{1, 1}, I}, {{3, 3}, -I}, {{5, 5}, -I}, {{7, 6}, 1}, {{6, 7}, -I}}, {6, 7});
}
dense::Mat rt3_table() {
  return table({{{5, 5}, -1}, {{7, 6}, I}, {{6, 7}, -I}}, {6, 7});
}
dense::Mat rt4_table() { return table({{{7, 6}, -I}, {{6, 7}, -I}}, {6, 7}); }

dense::Mat dagger(const dense::Mat& m) {
  dense::Mat r(8, std::vector<cd>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) r[i][j] = std::conj(m[j][i]);
  return r;
}

double max_diff(const dense::Mat& a, const dense::Mat& b) {
  double d = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

std::vector<Block> unitary_template(Variant v) {
  const std::array<WireIndex, 3> w{0, 1, 2};
  return expand(v, w, UncomputeMode::Unitary);
}

dense::Mat from_monomial(const MonomialMatrix& m) {
  dense::Mat r(8, std::vector<cd>(8));
  for (int c = 0; c < 8; ++c) r[m.image[c]][c] = dense::phase8(m.phase[c]);
  return r;
}

}  // namespace

TEST(ToffoliTemplates, MultiplyOutToPublishedMatrices) {
  const std::vector<std::pair<Variant, dense::Mat>> cases = {
      {Variant::ST, ideal_toffoli()},          {Variant::GRT, grt_table()},
      {Variant::IGRT, dagger(grt_table())},    {Variant::RT3, rt3_table()},
      {Variant::IRT3, dagger(rt3_table())},    {Variant::RT4, rt4_table()},
      {Variant::IRT4, dagger(rt4_table())}};
  for (const auto& [v, want] : cases) {
    const dense::Mat got = dense::unitary(unitary_template(v), 3);
    EXPECT_LE(max_diff(got, want), 1e-12) << to_string(v);
    EXPECT_LE(max_diff(from_monomial(variant_matrix(v)), want), 1e-12) << to_string(v);
  }
}

TEST(ToffoliTemplates, GateCounts) {
  EXPECT_EQ(t_cost(Variant::ST), 7);
  EXPECT_EQ(cnot_cost(Variant::ST), 6);
  EXPECT_EQ(decomposition(Variant::ST).primitive_template.size(), 16u);
  EXPECT_EQ(t_cost(Variant::GRT), 4);
  EXPECT_EQ(cnot_cost(Variant::GRT), 6);
  EXPECT_EQ(t_cost(Variant::IGRT), 0);
  EXPECT_EQ(cnot_cost(Variant::IGRT), 1);
  EXPECT_EQ(t_cost(Variant::RT3), 4);
  EXPECT_EQ(cnot_cost(Variant::RT3), 3);
  EXPECT_EQ(t_cost(Variant::RT4), 4);
  EXPECT_EQ(cnot_cost(Variant::RT4), 4);
  EXPECT_EQ(t_cost(Variant::PGRTFirst) + t_cost(Variant::PGRTSecond), 4);
  EXPECT_EQ(cnot_cost(Variant::PGRTFirst) + cnot_cost(Variant::PGRTSecond), 8);
}

TEST(ToffoliTemplates, GrtHasTDepthTwo) {
  Circuit c(1);
  c.add_register(Role::Ancilla, 3);
  for (const Block& b : unitary_template(Variant::GRT)) c.append(b);
  EXPECT_EQ(metric_depth(c, Metric::T), 2);
}

TEST(ToffoliTemplates, InverseTemplatesCancel) {
  for (Variant v : {Variant::ST, Variant::GRT, Variant::RT3, Variant::RT4}) {
    auto gates = unitary_template(v);
    for (const Block& b : unitary_template(inverse_of(v))) gates.push_back(b);
    const dense::Mat id = dense::unitary(gates, 3);
    EXPECT_LE(max_diff(id, table({}, {})), 1e-12) << to_string(v);
  }
}

// Measurement uncompute on wires {0,1,2}: valid when the target holds the
// AND, and then it acts as GRT^dagger for either measurement outcome.
TEST(ToffoliTemplates, MeasurementIgrtUndoesGrt) {
  const MonomialMatrix inv = variant_matrix(Variant::GRT).inverse();
  for (int c = 0; c < 4; ++c) {
    const int in = c * 2 + ((c == 3) ? 1 : 0);
    for (std::uint64_t seed = 0; seed < 16; ++seed) {
      Circuit circ(1);
      circ.add_register(Role::Ancilla, 3);
      circ.set_num_cbits(1);
      const std::array<WireIndex, 3> w{0, 1, 2};
      for (const Block& b : expand(Variant::IGRT, w, UncomputeMode::Measurement, 0))
        circ.append(b);
      std::vector<std::uint8_t> bits = {std::uint8_t(in >> 2 & 1), std::uint8_t(in >> 1 & 1),
                                        std::uint8_t(in & 1)};
      const dense::Vec out = run_statevector(circ, basis_state(3, bits), seed);
      const std::size_t row = inv.image[in];
      // basis_state uses wire w as bit w; remap to the table convention.
      const std::size_t sv_index = ((row >> 2) & 1) | (((row >> 1) & 1) << 1) | ((row & 1) << 2);
      EXPECT_NEAR(std::abs(out[sv_index] - dense::phase8(inv.phase[in])), 0, 1e-12)
          << "input " << in << " seed " << seed;
    }
  }
}

TEST(ToffoliTemplates, MonomialAlgebra) {
  const MonomialMatrix g = variant_matrix(Variant::GRT);
  EXPECT_EQ(g.then(g.inverse()), MonomialMatrix::identity());
  EXPECT_TRUE(g.is_permutation());
  EXPECT_EQ(g.phase[7], 6);
  EXPECT_EQ(variant_matrix(Variant::ST).phase, (std::array<std::uint8_t, 8>{}));
  EXPECT_THROW(variant_matrix(Variant::PGRTFirst), std::invalid_argument);
}

TEST(PhaseSafety, Rules) {
  using R = Round;
  const PlacementContext grt_ok{R::P, Section::Adder, true, TargetState::Zero};
  const PlacementContext grt_acc{R::G, Section::Adder, true, TargetState::Accumulate};
  EXPECT_TRUE(phase_safe(Variant::GRT, grt_ok));
  EXPECT_FALSE(phase_safe(Variant::GRT, grt_acc));
  EXPECT_TRUE(phase_safe(Variant::ST, grt_acc));
  EXPECT_TRUE(phase_safe(Variant::IGRT, {R::InvP, Section::Adder, false, TargetState::HoldsAnd}));
  EXPECT_FALSE(phase_safe(Variant::IGRT, {R::InvP, Section::Adder, false, TargetState::Accumulate}));
  EXPECT_TRUE(phase_safe(Variant::RT3, {R::P, Section::Adder, true, TargetState::Zero}));
  EXPECT_FALSE(phase_safe(Variant::RT3, {R::G, Section::Adder, true, TargetState::Accumulate}));
  EXPECT_TRUE(phase_safe(Variant::RT3, {R::G, Section::Comparator, true, TargetState::Accumulate}));
  EXPECT_FALSE(phase_safe(Variant::RT3, {R::Middle, Section::Comparator, true, TargetState::Zero}));
  EXPECT_TRUE(phase_safe(Variant::RT4, {R::C, Section::Adder, true, TargetState::Accumulate}));
  EXPECT_FALSE(phase_safe(Variant::RT4, {R::InvC, Section::Adder, true, TargetState::Accumulate}));
  EXPECT_TRUE(phase_safe(Variant::IRT4, {R::InvC, Section::Erase, false, TargetState::Accumulate}));
}
