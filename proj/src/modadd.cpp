#include "qcla/modadd.hpp"

#include <stdexcept>

#include "qcla/cla_adder.hpp"

namespace qcla {

void ModAddInstance::validate() const {
  if (n < 1) throw std::invalid_argument("instance: n must be >= 1");
  if (N < 1) throw std::invalid_argument("instance: N must be >= 1");
  if (N >= pow2(n)) throw std::invalid_argument("instance: N must be < 2^n");
  if (a < 0 || a >= N) throw std::invalid_argument("instance: a must satisfy 0 <= a < N");
}

BigUInt ModAddInstance::sub_value() const { return (pow2(n) + a - N) % pow2(n); }

ModAddInstance random_instance(int n, std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("random_instance: n must be >= 2");
  ModAddInstance inst;
  inst.n = n;
  inst.N = pow2(n - 1) + uniform_below(rng, pow2(n - 1));
  inst.a = uniform_below(rng, inst.N);
  return inst;
}

EmbedPlan EmbedPlan::from(const ModAddInstance& inst) {
  inst.validate();
  const BigUInt sub = inst.sub_value();
  EmbedPlan p;
  p.classes.resize(static_cast<std::size_t>(inst.n));
  for (int i = 0; i < inst.n; ++i) {
    const bool s = bit(sub, i), a = bit(inst.a, i);
    p.classes[i] = s && a ? BitClass::Both
                 : s      ? BitClass::OnlySub
                 : a      ? BitClass::OnlyAdd
                          : BitClass::Neither;
  }
  return p;
}

std::vector<int> EmbedPlan::members(BitClass c) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == c) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<bool> EmbedPlan::idle() const {
  std::vector<bool> out(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) out[i] = classes[i] == BitClass::Neither;
  return out;
}

Circuit modadd_layout(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const auto un = static_cast<std::uint32_t>(n);
  Circuit c(n);
  c.add_register(Role::Ctrl, 1);
  c.add_register(Role::D, un);
  c.add_register(Role::B, un);
  c.add_register(Role::Carry, un);
  c.add_register(Role::PFunc, un);
  c.add_register(Role::Comp, 1);
  return c;
}

namespace {

std::vector<WireIndex> span_wires(const RegisterSpan& s) {
  std::vector<WireIndex> v(s.size);
  for (std::uint32_t i = 0; i < s.size; ++i) v[i] = s[i];
  return v;
}

void emit_c_comparator(CircuitBuilder& out, const ModAddInstance& inst, Which which) {
  const Circuit& c = out.circuit();
  ComparatorWires w{span_wires(c.reg(Role::B)), span_wires(c.reg(Role::Carry)),
                    span_wires(c.reg(Role::PFunc))};
  const WireIndex ctrl = c.wire(Role::Ctrl, 0), comp = c.wire(Role::Comp, 0);
  const bool first = which == Which::First;
  const BigUInt d = first ? BigUInt(inst.N - inst.a) : inst.a;
  const TargetState ts = first ? TargetState::Zero : TargetState::HoldsAnd;
  emit_comparator(out, w, inst.n, d, first ? Sense::GEQ : Sense::LT,
                  [&](CircuitBuilder& o, WireIndex cn) {
                    o.toffoli(ctrl, cn, comp, ts);
                  });
}

void emit_embed(CircuitBuilder& out, const ModAddInstance& inst) {
  const Circuit& c = out.circuit();
  const EmbedPlan plan = EmbedPlan::from(inst);
  const WireIndex ctrl = c.wire(Role::Ctrl, 0), comp = c.wire(Role::Comp, 0);
  const RegisterSpan d = c.reg(Role::D);
  out.at(Section::Embedding, Round::Embed);
  for (BitClass cls : {BitClass::Both, BitClass::OnlySub, BitClass::OnlyAdd}) {
    const auto bits = plan.members(cls);
    if (bits.empty()) continue;
    const WireIndex head = d[static_cast<std::uint32_t>(bits[0])];
    if (cls == BitClass::Both) {
      out.cnot(ctrl, head);
    } else if (cls == BitClass::OnlySub) {
      out.toffoli(ctrl, comp, head, TargetState::Zero);
    } else {
      out.x(comp);
      out.toffoli(ctrl, comp, head, TargetState::Zero);
      out.x(comp);
    }
    // Balanced fanout: the set of written bits doubles each layer.
    std::size_t have = 1;
    while (have < bits.size()) {
      const std::size_t layer = have;
      for (std::size_t j = 0; j < layer && have < bits.size(); ++j, ++have)
        out.cnot(d[static_cast<std::uint32_t>(bits[j])],
                 d[static_cast<std::uint32_t>(bits[have])]);
    }
  }
}

void emit_inverse_of(CircuitBuilder& out, const Circuit& fwd) {
  for (auto it = fwd.blocks().rbegin(); it != fwd.blocks().rend(); ++it) {
    Block b = inverse_block(*it);
    out.at(b.section, b.round, b.step);
    out.push(b);
  }
}

void emit_cc_adder(CircuitBuilder& out, const ModAddInstance& inst) {
  const Circuit& c = out.circuit();
  Circuit embed = c.layout_copy();
  CircuitBuilder eb(embed);
  emit_embed(eb, inst);
  for (const auto& b : embed.blocks()) {
    out.at(b.section, b.round, b.step);
    out.push(b);
  }
  AdderWires w{span_wires(c.reg(Role::D)), span_wires(c.reg(Role::B)),
               span_wires(c.reg(Role::Carry)), span_wires(c.reg(Role::PFunc))};
  AdderOptions opt;
  opt.skip_top_carry = true;
  opt.idle = EmbedPlan::from(inst).idle();
  emit_adder(out, w, inst.n, opt);
  emit_inverse_of(out, embed);
}

}  // namespace

Circuit synth_c_comparator(const ModAddInstance& inst, Which which) {
  inst.validate();
  Circuit c = modadd_layout(inst.n);
  CircuitBuilder out(c);
  emit_c_comparator(out, inst, which);
  return c;
}

Circuit synth_embed(const ModAddInstance& inst, Direction dir) {
  inst.validate();
  Circuit c = modadd_layout(inst.n);
  CircuitBuilder out(c);
  if (dir == Direction::Embed) {
    emit_embed(out, inst);
    return c;
  }
  Circuit fwd = modadd_layout(inst.n);
  CircuitBuilder fb(fwd);
  emit_embed(fb, inst);
  emit_inverse_of(out, fwd);
  return c;
}

Circuit synth_cc_adder(const ModAddInstance& inst) {
  inst.validate();
  Circuit c = modadd_layout(inst.n);
  CircuitBuilder out(c);
  emit_cc_adder(out, inst);
  return c;
}

Circuit synth_modadd(const ModAddInstance& inst) {
  inst.validate();
  Circuit c = modadd_layout(inst.n);
  CircuitBuilder out(c);
  emit_c_comparator(out, inst, Which::First);
  emit_cc_adder(out, inst);
  emit_c_comparator(out, inst, Which::Last);
  return c;
}

}  // namespace qcla
