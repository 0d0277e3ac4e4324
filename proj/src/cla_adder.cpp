#include "qcla/cla_adder.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qcla {

int floor_log2(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("floor_log2(0)");
  return static_cast<int>(std::bit_width(x)) - 1;
}

int ceil_log2(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("ceil_log2(0)");
  return x == 1 ? 0 : floor_log2(x - 1) + 1;
}

std::vector<RoundPlan> p_rounds(int m) {
  std::vector<RoundPlan> out;
  if (m < 2) return out;
  for (int t = 1; t <= floor_log2(m) - 1; ++t) {
    RoundPlan r{Round::P, t, {}};
    for (int i = 1; i <= (m >> t) - 1; ++i)
      r.nodes.push_back({i << t, (i << t) + (1 << (t - 1)), (i + 1) << t});
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RoundPlan> g_rounds(int m) {
  std::vector<RoundPlan> out;
  if (m < 2) return out;
  for (int t = 1; t <= floor_log2(m); ++t) {
    RoundPlan r{Round::G, t, {}};
    for (int i = 0; i <= (m >> t) - 1; ++i)
      r.nodes.push_back({i << t, (i << t) + (1 << (t - 1)), (i + 1) << t});
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RoundPlan> c_rounds(int m) {
  std::vector<RoundPlan> out;
  if (m < 2) return out;
  int top = 0;
  while (3 * (std::int64_t{1} << (top + 1)) <= 2 * std::int64_t{m}) ++top;
  for (int t = top; t >= 1; --t) {
    RoundPlan r{Round::C, t, {}};
    const int half = 1 << (t - 1);
    for (int i = 1; i <= (m - half) >> t; ++i)
      r.nodes.push_back({i << t, (i << t) + half, (i + 1) << t});
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RoundPlan> comparator_p_rounds(int n) {
  std::vector<RoundPlan> out;
  if (n < 2) return out;
  const int k = ceil_log2(static_cast<std::uint64_t>(n));
  for (int t = 1; t <= k - 1; ++t) {
    RoundPlan r{Round::P, t, {}};
    for (int i = 1; i <= (1 << (k - t)) - 1; ++i) {
      const int lo = i << t, mid = lo + (1 << (t - 1));
      if (mid >= n) continue;
      r.nodes.push_back({lo, mid, lo + (1 << t)});
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RoundPlan> comparator_g_rounds(int n) {
  std::vector<RoundPlan> out;
  if (n < 2) return out;
  const int k = ceil_log2(static_cast<std::uint64_t>(n));
  for (int t = 1; t <= k; ++t) {
    RoundPlan r{Round::G, t, {}};
    for (int i = 0; i <= (1 << (k - t)) - 1; ++i) {
      const int lo = i << t, mid = lo + (1 << (t - 1));
      if (mid >= n) continue;
      r.nodes.push_back({lo, mid, lo + (1 << t)});
    }
    out.push_back(std::move(r));
  }
  return out;
}

WireIndex p_location(const std::vector<WireIndex>& b, const std::vector<WireIndex>& pfunc,
                     int lo, int hi, int n) {
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    if (mid < n) return pfunc[mid];
    hi = mid;
  }
  return b[lo];
}

namespace {

void check_width(const AdderWires& w, int n) {
  const auto sz = static_cast<std::size_t>(n);
  if (w.a.size() != sz || w.b.size() != sz || w.carry.size() != sz || w.pfunc.size() != sz)
    throw std::invalid_argument("adder register width mismatch");
}

// Init, P, G, C and inverse-P on the low m bits.
void emit_carries(CircuitBuilder& out, const AdderWires& w, int m, int n,
                  const AdderOptions& opt, Section sec) {
  auto idle = [&](int i) { return i < static_cast<int>(opt.idle.size()) && opt.idle[i]; };
  auto loc = [&](int lo, int hi) { return p_location(w.b, w.pfunc, lo, hi, n); };
  auto carry = [&](int i) { return w.carry[i - 1]; };
  const bool skip = opt.skip_top_carry && m == n;

  out.at(sec, Round::Init);
  for (int i = 0; i < m; ++i) {
    if (idle(i)) continue;
    if (!(skip && i + 1 == n)) out.toffoli(w.a[i], w.b[i], carry(i + 1), TargetState::Zero);
    out.cnot(w.a[i], w.b[i]);
  }
  const auto ps = p_rounds(m);
  for (const auto& r : ps) {
    out.at(sec, Round::P, r.t);
    for (const auto& s : r.nodes) {
      if (skip && s.hi == n) continue;
      out.toffoli(loc(s.lo, s.mid), loc(s.mid, s.hi), w.pfunc[s.mid], TargetState::Zero);
    }
  }
  for (const auto& r : g_rounds(m)) {
    out.at(sec, Round::G, r.t);
    for (const auto& s : r.nodes) {
      if (skip && s.hi == n) continue;
      out.toffoli(carry(s.mid), loc(s.mid, s.hi), carry(s.hi), TargetState::Accumulate);
    }
  }
  for (const auto& r : c_rounds(m)) {
    out.at(sec, Round::C, r.t);
    for (const auto& s : r.nodes) {
      if (skip && s.mid == n) continue;
      out.toffoli(carry(s.lo), loc(s.lo, s.mid), carry(s.mid), TargetState::Accumulate);
    }
  }
  for (auto r = ps.rbegin(); r != ps.rend(); ++r) {
    out.at(sec, Round::InvP, r->t);
    for (const auto& s : r->nodes) {
      if (skip && s.hi == n) continue;
      out.toffoli(loc(s.lo, s.mid), loc(s.mid, s.hi), w.pfunc[s.mid], TargetState::HoldsAnd);
    }
  }
}

}  // namespace

void emit_adder(CircuitBuilder& out, const AdderWires& w, int n, const AdderOptions& opt) {
  if (n < 1) throw std::invalid_argument("adder width must be >= 1");
  check_width(w, n);
  auto idle = [&](int i) { return i < static_cast<int>(opt.idle.size()) && opt.idle[i]; };

  emit_carries(out, w, n, n, opt, Section::Adder);
  out.at(Section::Adder, Round::CalcSum);
  for (int i = 1; i < n; ++i) out.cnot(w.carry[i - 1], w.b[i]);

  // Erase c_1..c_{n-1}: they are also the carries of a + ~s on n-1 bits.
  const int m = n - 1;
  out.at(Section::Erase, Round::PE);
  for (int i = 0; i < m; ++i) {
    out.x(w.b[i]);
    if (!idle(i)) out.cnot(w.a[i], w.b[i]);
  }
  Circuit scratch = out.circuit().layout_copy();
  CircuitBuilder tmp(scratch);
  emit_carries(tmp, w, m, n, opt, Section::Erase);
  for (auto it = scratch.blocks().rbegin(); it != scratch.blocks().rend(); ++it) {
    Block b = inverse_block(*it);
    out.at(Section::Erase, b.round, b.step);
    out.push(b);
  }
  out.at(Section::Erase, Round::InvPE);
  for (int i = 0; i < m; ++i) out.x(w.b[i]);
}

namespace {

std::vector<WireIndex> span_wires(const RegisterSpan& s) {
  std::vector<WireIndex> v(s.size);
  for (std::uint32_t i = 0; i < s.size; ++i) v[i] = s[i];
  return v;
}

}  // namespace

Circuit synth_adder(int n, bool a_is_quantum) {
  if (n < 1) throw std::invalid_argument("synth_adder: n must be >= 1");
  if (!a_is_quantum)
    throw std::invalid_argument("synth_adder: classical addends use the modular adder path");
  Circuit c(n);
  const auto un = static_cast<std::uint32_t>(n);
  AdderWires w{span_wires(c.add_register(Role::D, un)), span_wires(c.add_register(Role::B, un)),
               span_wires(c.add_register(Role::Carry, un)),
               span_wires(c.add_register(Role::PFunc, un))};
  CircuitBuilder out(c);
  emit_adder(out, w, n);
  return c;
}

void emit_comparator(CircuitBuilder& out, const ComparatorWires& w, int n, const BigUInt& d,
                     Sense sense, const ResultHook& hook) {
  if (n < 1) throw std::invalid_argument("comparator width must be >= 1");
  if (d < 0 || d >= pow2(n)) throw std::invalid_argument("comparator constant out of range");
  const WireIndex cn = w.carry[n - 1];
  // b >= d iff b + (2^n - d) overflows. For d = 0 the overflow is constant 1
  // while the n-bit constant is 0, so the result is inverted instead.
  bool invert = sense == Sense::LT;
  if (d == 0) {
    invert = !invert;
    out.at(Section::Comparator, Round::Middle);
    if (invert) out.x(cn);
    hook(out, cn);
    if (invert) out.x(cn);
    return;
  }
  const BigUInt k = pow2(n) - d;
  auto loc = [&](int lo, int hi) { return p_location(w.b, w.pfunc, lo, hi, n); };
  auto carry = [&](int i) { return w.carry[std::min(i, n) - 1]; };

  const std::size_t start = out.circuit().size();
  out.at(Section::Comparator, Round::Init);
  for (int i = 0; i < n; ++i) {
    if (!bit(k, i)) continue;
    out.cnot(w.b[i], carry(i + 1));
    out.x(w.b[i]);
  }
  for (const auto& r : comparator_p_rounds(n)) {
    out.at(Section::Comparator, Round::P, r.t);
    for (const auto& s : r.nodes)
      out.toffoli(loc(s.lo, s.mid), loc(s.mid, s.hi), w.pfunc[s.mid], TargetState::Zero);
  }
  for (const auto& r : comparator_g_rounds(n)) {
    out.at(Section::Comparator, Round::G, r.t);
    for (const auto& s : r.nodes)
      out.toffoli(carry(s.mid), loc(s.mid, s.hi), carry(s.hi), TargetState::Accumulate);
  }
  const std::size_t end = out.circuit().size();

  out.at(Section::Comparator, Round::Middle);
  if (invert) out.x(cn);
  hook(out, cn);
  if (invert) out.x(cn);

  for (std::size_t i = end; i-- > start;) {
    Block b = inverse_block(out.circuit()[i]);
    out.at(Section::Comparator, b.round, b.step);
    out.push(b);
  }
}

Circuit synth_comparator_skeleton(int n, const BigUInt& d, Sense sense) {
  if (n < 1) throw std::invalid_argument("comparator: n must be >= 1");
  Circuit c(n);
  const auto un = static_cast<std::uint32_t>(n);
  ComparatorWires w{span_wires(c.add_register(Role::B, un)),
                    span_wires(c.add_register(Role::Carry, un)),
                    span_wires(c.add_register(Role::PFunc, un))};
  const WireIndex comp = c.add_register(Role::Comp, 1)[0];
  CircuitBuilder out(c);
  emit_comparator(out, w, n, d, sense,
                  [comp](CircuitBuilder& o, WireIndex cn) { o.cnot(cn, comp); });
  return c;
}

}  // namespace qcla
