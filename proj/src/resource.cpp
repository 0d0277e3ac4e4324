#include "qcla/resource.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "qcla/cla_adder.hpp"
#include "qcla/modadd.hpp"

namespace qcla {

std::string round_label(Section s, Round r) {
  static const std::map<Round, std::string> names = {
      {Round::Init, "Init"},   {Round::P, "P"},           {Round::G, "G"},
      {Round::C, "C"},         {Round::InvP, "InvP"},     {Round::InvG, "InvG"},
      {Round::InvC, "InvC"},   {Round::InvInit, "InvInit"}, {Round::PE, "PE"},
      {Round::InvPE, "InvPE"}, {Round::CalcSum, "Calc"},  {Round::Embed, "Embed"},
      {Round::Reset, "Reset"}, {Round::Middle, "Middle"}, {Round::Erase, "Erase"},
      {Round::Other, "Other"}};
  switch (s) {
    case Section::Comparator: return "C-comp/" + names.at(r);
    case Section::Adder: return "CC-add/" + names.at(r);
    case Section::Erase: return "CC-add/Erase/" + names.at(r);
    case Section::Embedding: return "CC-add/" + names.at(r);
    case Section::None: break;
  }
  return names.at(r);
}

namespace {

std::string gate_name(Variant origin) {
  switch (origin) {
    case Variant::Plain: return "ST";
    case Variant::PGRTFirst:
    case Variant::PGRTSecond: return "PGRT";
    default: return std::string(to_string(origin));
  }
}

int gadget_t_cost(Variant origin) {
  if (origin == Variant::PGRTFirst || origin == Variant::PGRTSecond)
    return t_cost(Variant::PGRTFirst) + t_cost(Variant::PGRTSecond);
  return t_cost(origin == Variant::Plain ? Variant::ST : origin);
}

int gadget_cnot_cost(Variant origin) {
  if (origin == Variant::PGRTFirst || origin == Variant::PGRTSecond)
    return cnot_cost(Variant::PGRTFirst) + cnot_cost(Variant::PGRTSecond);
  return cnot_cost(origin == Variant::Plain ? Variant::ST : origin);
}

struct RowAcc {
  std::int64_t toffolis = 0;
  std::set<Variant> origins;
  Circuit sub;
};

}  // namespace

ResourceReport analyze(const Circuit& block_level, Strategy s, UncomputeMode mode) {
  if (s == Strategy::VanMeterItohRef) return reference_report(block_level.n());
  ResourceReport r;
  r.n = block_level.n();
  r.strategy = std::string(to_string(s));
  r.toffoli_count = count(block_level, Metric::Toffoli);
  r.toffoli_depth = metric_depth(block_level, Metric::Toffoli);
  r.block_cnot_count = count_kind(block_level, GateKind::CNOT);
  {
    Circuit plain = block_level.layout_copy();
    plain.set_num_cbits(block_level.num_cbits());
    for (const Block& b : block_level.blocks())
      if (b.kind != GateKind::Toffoli) plain.append(b);
    // Toffolis still order the CNOTs they share wires with.
    std::vector<std::int64_t> wire_t(block_level.num_wires(), 0);
    std::int64_t best = 0;
    for (const Block& b : block_level.blocks()) {
      std::int64_t start = 0;
      for (int i = 0; i < b.nwires; ++i) start = std::max(start, wire_t[b.wires[i]]);
      const std::int64_t fin = start + (b.kind == GateKind::CNOT ? 1 : 0);
      for (int i = 0; i < b.nwires; ++i) wire_t[b.wires[i]] = fin;
      best = std::max(best, fin);
    }
    r.block_cnot_depth = best;
  }

  const Circuit prim = lower(block_level, s, mode);
  r.t_count = count(prim, Metric::T);
  r.cnot_count = count(prim, Metric::CNOT);
  r.t_depth = metric_depth(prim, Metric::T);
  r.cnot_depth = metric_depth(prim, Metric::CNOT);
  r.qubit_count = static_cast<std::int64_t>(prim.num_wires());
  r.kq_t = r.qubit_count * r.t_depth;
  r.kq_cx = r.qubit_count * r.cnot_depth;

  std::vector<std::string> order;
  std::map<std::string, RowAcc> rows;
  auto row = [&](const Block& b) -> RowAcc& {
    const std::string key = round_label(b.section, b.round);
    auto it = rows.find(key);
    if (it == rows.end()) {
      order.push_back(key);
      it = rows.emplace(key, RowAcc{0, {}, prim.layout_copy()}).first;
      it->second.sub.set_num_cbits(prim.num_cbits());
    }
    return it->second;
  };
  for (const Block& b : block_level.blocks()) {
    RowAcc& acc = row(b);
    if (b.kind == GateKind::Toffoli) ++acc.toffolis;
  }
  for (const Block& b : prim.blocks()) {
    RowAcc& acc = row(b);
    if (b.origin != Variant::Plain || b.kind == GateKind::Toffoli) acc.origins.insert(b.origin);
    acc.sub.append(b);
  }
  for (const auto& key : order) {
    const RowAcc& acc = rows.at(key);
    RoundRow rr;
    rr.label = key;
    rr.toffolis = acc.toffolis;
    if (acc.origins.empty()) {
      rr.gate = "--";
    } else {
      std::set<std::string> names;
      for (Variant v : acc.origins) names.insert(gate_name(v));
      for (const auto& nm : names) rr.gate += (rr.gate.empty() ? "" : "+") + nm;
      rr.t_cost = gadget_t_cost(*acc.origins.begin());
      rr.cnot_cost = gadget_cnot_cost(*acc.origins.begin());
    }
    rr.t_count = count(acc.sub, Metric::T);
    rr.cnot_count = count(acc.sub, Metric::CNOT);
    rr.t_depth = metric_depth(acc.sub, Metric::T);
    rr.cnot_depth = metric_depth(acc.sub, Metric::CNOT);
    r.per_round.push_back(std::move(rr));
  }
  return r;
}

ResourceReport reference_report(int n) {
  if (n < 1) throw std::invalid_argument("reference_report: n must be >= 1");
  ResourceReport r;
  r.n = n;
  r.strategy = std::string(to_string(Strategy::VanMeterItohRef));
  r.model = true;
  const double lg = std::log2(static_cast<double>(n));
  const auto st_t = t_cost(Variant::ST), st_cx = cnot_cost(Variant::ST);
  Circuit one(1);
  one.add_register(Role::Ancilla, 3);
  for (const Block& b : expand(Variant::ST, std::array<WireIndex, 3>{0, 1, 2},
                               UncomputeMode::Unitary))
    one.append(b);
  const auto st_t_depth = metric_depth(one, Metric::T);
  const auto st_cx_depth = metric_depth(one, Metric::CNOT);
  r.toffoli_count = 30LL * n;
  r.t_count = r.toffoli_count * st_t;
  r.block_cnot_count = std::llround(4.5 * n);
  r.cnot_count = r.toffoli_count * st_cx + r.block_cnot_count;
  r.qubit_count = 4LL * n;
  r.toffoli_depth = std::llround(12 * lg);
  r.t_depth = std::llround(12 * lg * static_cast<double>(st_t_depth));
  r.block_cnot_depth = std::llround(6 * lg);
  r.cnot_depth = std::llround(12 * lg * static_cast<double>(st_cx_depth) + 6 * lg);
  r.kq_t = r.qubit_count * r.t_depth;
  r.kq_cx = r.qubit_count * r.cnot_depth;
  return r;
}

std::vector<AverageReport> average_reports(int n, const std::vector<Strategy>& strategies,
                                           std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("average_reports: samples must be >= 1");
  std::vector<AverageReport> out(strategies.size());
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    out[i].n = n;
    out[i].strategy = std::string(to_string(strategies[i]));
    out[i].samples = samples;
    out[i].seed = seed;
  }
  std::mt19937_64 rng(seed);
  for (std::int64_t k = 0; k < samples; ++k) {
    const Circuit c = synth_modadd(random_instance(n, rng));
    for (std::size_t i = 0; i < strategies.size(); ++i) {
      const ResourceReport r = analyze(c, strategies[i]);
      AverageReport& a = out[i];
      a.model = r.model;
      a.toffoli_count += double(r.toffoli_count);
      a.t_count += double(r.t_count);
      a.cnot_count += double(r.cnot_count);
      a.qubit_count += double(r.qubit_count);
      a.toffoli_depth += double(r.toffoli_depth);
      a.t_depth += double(r.t_depth);
      a.cnot_depth += double(r.cnot_depth);
      a.kq_t += double(r.kq_t);
      a.kq_cx += double(r.kq_cx);
      a.block_cnot_count += double(r.block_cnot_count);
      a.block_cnot_depth += double(r.block_cnot_depth);
    }
  }
  const double inv = 1.0 / double(samples);
  for (AverageReport& a : out)
    for (double* f : {&a.toffoli_count, &a.t_count, &a.cnot_count, &a.qubit_count,
                      &a.toffoli_depth, &a.t_depth, &a.cnot_depth, &a.kq_t, &a.kq_cx,
                      &a.block_cnot_count, &a.block_cnot_depth})
      *f *= inv;
  return out;
}

double model_t_depth(double n, double n_t) {
  return 86.0 * n / n_t + 12.0 * std::log2(n_t) - 12.0;
}

double model_kq_t(double n, double n_t, double c_g) {
  return (4.0 * n + (c_g + 1.0) * n_t + 2.0) * model_t_depth(n, n_t);
}

double closed_form_t_width(double n, double c_g) {
  if (n <= 1) return 1.0;
  return std::sqrt(86.0 / (3.0 * (c_g + 1.0))) * n / std::sqrt(std::log2(n));
}

std::int64_t optimal_t_width(std::int64_t n, double c_g) {
  if (n <= 1) return 1;
  const auto f = [&](std::int64_t k) { return model_kq_t(double(n), double(k), c_g); };
  // The closed form drops lower-order terms; the model is convex in n_T,
  // so a local descent from it reaches the integer minimizer.
  std::int64_t k = std::max<std::int64_t>(1, std::llround(closed_form_t_width(double(n), c_g)));
  while (k > 1 && f(k - 1) <= f(k)) --k;
  while (f(k + 1) < f(k)) ++k;
  return k;
}

std::int64_t schedule_t_width(const Circuit& c, std::int64_t n_t) {
  if (n_t < 1) throw std::invalid_argument("schedule_t_width: n_T must be >= 1");
  require_metric_level(c, Metric::T);
  const Dag dag = dependency_dag(c);
  const std::size_t nb = c.size();
  std::vector<std::vector<std::uint32_t>> succ(nb);
  std::vector<std::uint32_t> indeg(nb, 0);
  for (std::uint32_t v = 0; v < nb; ++v) {
    indeg[v] = static_cast<std::uint32_t>(dag.preds[v].size());
    for (auto u : dag.preds[v]) succ[u].push_back(v);
  }
  // Remaining T-depth including the node itself.
  std::vector<std::int64_t> prio(nb, 0);
  for (std::size_t v = nb; v-- > 0;) {
    std::int64_t best = 0;
    for (auto s : succ[v]) best = std::max(best, prio[s]);
    prio[v] = best + (matches(Metric::T, c[v]) ? 1 : 0);
  }
  using Item = std::pair<std::int64_t, std::int64_t>;  // (priority, -index)
  std::priority_queue<Item> ready_t;
  std::vector<std::uint32_t> ready_free;
  auto release = [&](std::uint32_t v) {
    if (matches(Metric::T, c[v])) ready_t.push({prio[v], -static_cast<std::int64_t>(v)});
    else ready_free.push_back(v);
  };
  for (std::uint32_t v = 0; v < nb; ++v)
    if (indeg[v] == 0) release(v);
  std::int64_t layers = 0;
  std::vector<std::uint32_t> fired;
  while (true) {
    while (!ready_free.empty()) {
      const auto v = ready_free.back();
      ready_free.pop_back();
      for (auto s : succ[v])
        if (--indeg[s] == 0) release(s);
    }
    if (ready_t.empty()) break;
    ++layers;
    fired.clear();
    while (!ready_t.empty() && static_cast<std::int64_t>(fired.size()) < n_t) {
      fired.push_back(static_cast<std::uint32_t>(-ready_t.top().second));
      ready_t.pop();
    }
    for (auto v : fired)
      for (auto s : succ[v])
        if (--indeg[s] == 0) release(s);
  }
  return layers;
}

Distillation synth_distillation() {
  Distillation d;
  d.circuit = Circuit(0);
  const RegisterSpan q = d.circuit.add_register(Role::Magic, 15);
  CircuitBuilder out(d.circuit);
  // (control, targets) per column; wire 0 carries the output.
  const std::vector<std::pair<int, std::vector<int>>> columns = {
      {1, {0, 4, 6, 8, 10, 12, 14}},
      {2, {0, 5, 6, 9, 10, 13, 14}},
      {3, {4, 5, 6, 11, 12, 13, 14}},
      {7, {8, 9, 10, 11, 12, 13, 14}},
      {0, {4, 5, 8, 9, 11, 14}},
  };
  int step = 0;
  for (const auto& [ctl, targets] : columns) {
    out.at(Section::None, Round::Other, ++step);
    for (int t : targets)
      out.cnot(q[static_cast<std::uint32_t>(ctl)], q[static_cast<std::uint32_t>(t)]);
  }
  out.at(Section::None, Round::Other, ++step);
  for (std::uint32_t w = 1; w < 15; ++w) {
    Block m;
    const bool x_basis = w == 1 || w == 2 || w == 3 || w == 7;
    m.kind = x_basis ? GateKind::MeasureX : GateKind::MeasureZ;
    m.nwires = 1;
    m.wires[0] = q[w];
    m.cbit = d.circuit.add_cbit();
    out.push(m);
  }
  d.qubits = static_cast<std::int64_t>(d.circuit.num_wires());
  d.cnot_count = count(d.circuit, Metric::CNOT);
  d.measurements = 14;
  d.depth = fanout_depth(d.circuit);
  return d;
}

std::int64_t fanout_depth(const Circuit& c) {
  std::vector<std::int64_t> wire_t(c.num_wires(), 0);
  std::int64_t best = 0;
  const auto& blocks = c.blocks();
  for (std::size_t i = 0; i < blocks.size();) {
    // Group a run of CNOTs with one control in one column.
    std::size_t j = i + 1;
    if (blocks[i].kind == GateKind::CNOT)
      while (j < blocks.size() && blocks[j].kind == GateKind::CNOT &&
             blocks[j].wires[0] == blocks[i].wires[0] && blocks[j].step == blocks[i].step)
        ++j;
    std::int64_t start = 0;
    for (std::size_t k = i; k < j; ++k)
      for (int w = 0; w < blocks[k].nwires; ++w)
        start = std::max(start, wire_t[blocks[k].wires[w]]);
    for (std::size_t k = i; k < j; ++k)
      for (int w = 0; w < blocks[k].nwires; ++w) wire_t[blocks[k].wires[w]] = start + 1;
    best = std::max(best, start + 1);
    i = j;
  }
  return best;
}

}  // namespace qcla
