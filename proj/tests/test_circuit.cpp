#include <gtest/gtest.h>

#include "qcla/circuit.hpp"
#include "qcla/toffoli.hpp"

using namespace qcla;

namespace {

Circuit wires(std::uint32_t k) {
  Circuit c(1);
  c.add_register(Role::Ancilla, k);
  return c;
}

}  // namespace

TEST(Circuit, RegistersAreContiguous) {
  Circuit c(3);
  const auto d = c.add_register(Role::D, 3);
  const auto b = c.add_register(Role::B, 3);
  EXPECT_EQ(d.start, 0u);
  EXPECT_EQ(b.start, 3u);
  EXPECT_EQ(c.num_wires(), 6u);
  EXPECT_EQ(c.wire(Role::B, 2), 5u);
  EXPECT_EQ(c.wires()[4], (Wire{Role::B, 1}));
  EXPECT_THROW(c.add_register(Role::D, 1), std::invalid_argument);
  EXPECT_FALSE(c.has_register(Role::Comp));
}

TEST(Circuit, AppendValidates) {
  Circuit c = wires(3);
  CircuitBuilder out(c);
  EXPECT_THROW(out.cnot(0, 0), std::invalid_argument);
  EXPECT_THROW(out.cnot(0, 7), std::invalid_argument);
  EXPECT_THROW(out.cz(0, 1, 0), std::invalid_argument);  // no such classical bit
  out.toffoli(0, 1, 2, TargetState::Zero);
  EXPECT_EQ(c.size(), 1u);
}

TEST(Dag, Examples) {
  Circuit c = wires(4);
  EXPECT_EQ(dependency_dag(c).num_edges(), 0u);
  CircuitBuilder out(c);
  out.cnot(0, 1);
  out.cnot(2, 3);
  EXPECT_EQ(dependency_dag(c).num_edges(), 0u);
  Circuit d = wires(3);
  CircuitBuilder o2(d);
  o2.cnot(0, 1);
  o2.cnot(1, 2);
  EXPECT_EQ(dependency_dag(d).num_edges(), 1u);
}

TEST(Dag, ConditionEdge) {
  Circuit c = wires(3);
  const int m = c.add_cbit();
  CircuitBuilder out(c);
  Block meas;
  meas.kind = GateKind::MeasureXUncompute;
  meas.nwires = 1;
  meas.wires[0] = 2;
  meas.cbit = m;
  out.push(meas);
  out.cz(0, 1, m);
  const Dag g = dependency_dag(c);
  ASSERT_EQ(g.preds[1].size(), 1u);
  EXPECT_EQ(g.preds[1][0], 0u);
}

TEST(MetricDepth, Chains) {
  Circuit c = wires(2);
  CircuitBuilder out(c);
  for (int i = 0; i < 5; ++i) out.cnot(0, 1);
  EXPECT_EQ(metric_depth(c, Metric::CNOT), 5);
  EXPECT_EQ(metric_depth(c, Metric::Total), 5);
  EXPECT_EQ(metric_depth(c, Metric::T), 0);
  EXPECT_EQ(count(Circuit(), Metric::Total), 0);
}

TEST(MetricDepth, StTemplateRegression) {
  // Exact T-depth of the 16-gate layout used for the standard Toffoli.
  Circuit c = wires(3);
  const std::array<WireIndex, 3> w{0, 1, 2};
  for (const Block& b : expand(Variant::ST, w, UncomputeMode::Unitary)) c.append(b);
  EXPECT_EQ(count(c, Metric::T), 7);
  EXPECT_EQ(metric_depth(c, Metric::T), 5);
  EXPECT_EQ(count_kind(c, GateKind::H), 2);
  EXPECT_EQ(count_kind(c, GateKind::S), 1);
}

TEST(MetricDepth, RequiresPrimitiveLevel) {
  Circuit c = wires(3);
  CircuitBuilder(c).toffoli(0, 1, 2, TargetState::Zero);
  EXPECT_EQ(metric_depth(c, Metric::Toffoli), 1);
  EXPECT_THROW(metric_depth(c, Metric::T), std::invalid_argument);
}

TEST(Inverse, SwapsPhaseGatesAndLabels) {
  Block t;
  t.kind = GateKind::T;
  t.nwires = 1;
  t.round = Round::G;
  const Block inv = inverse_block(t);
  EXPECT_EQ(inv.kind, GateKind::Tdg);
  EXPECT_EQ(inv.round, Round::InvG);
  Block tof;
  tof.kind = GateKind::Toffoli;
  tof.variant = Variant::RT3;
  tof.nwires = 3;
  tof.wires = {0, 1, 2};
  tof.target = TargetState::Zero;
  const Block ti = inverse_block(tof);
  EXPECT_EQ(ti.variant, Variant::IRT3);
  EXPECT_EQ(ti.target, TargetState::HoldsAnd);
  Block m;
  m.kind = GateKind::MeasureZ;
  m.nwires = 1;
  m.cbit = 0;
  EXPECT_THROW(inverse_block(m), std::invalid_argument);
}

TEST(Names, RoundTrip) {
  for (int i = 0; i <= static_cast<int>(Round::Other); ++i)
    EXPECT_EQ(parse_round(to_string(static_cast<Round>(i))), static_cast<Round>(i));
  for (int i = 0; i <= static_cast<int>(Variant::IRT4); ++i)
    EXPECT_EQ(parse_variant(to_string(static_cast<Variant>(i))), static_cast<Variant>(i));
  EXPECT_FALSE(parse_round("nope").has_value());
}
