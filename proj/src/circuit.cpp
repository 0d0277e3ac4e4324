#include "qcla/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qcla {

namespace {

template <typename E, std::size_t K>
std::optional<E> parse_from(const std::array<std::string_view, K>& names,
                            std::string_view s) {
  for (std::size_t i = 0; i < K; ++i)
    if (names[i] == s) return static_cast<E>(i);
  return std::nullopt;
}

constexpr std::array<std::string_view, 8> kRoleNames = {
    "CTRL", "D", "B", "CARRY", "PFUNC", "COMP", "ANCILLA", "MAGIC"};
constexpr std::array<std::string_view, 13> kKindNames = {
    "X",    "H",    "S",         "SDG",      "T",        "TDG",     "Z",
    "CNOT", "CZ",   "MEASURE_X_BASIS_UNCOMPUTE", "MEASURE_X", "MEASURE_Z",
    "TOFFOLI_VARIANT"};
constexpr std::array<std::string_view, 10> kVariantNames = {
    "PLAIN", "ST", "GRT", "IGRT", "PGRT_FIRST", "PGRT_SECOND",
    "RT3",   "IRT3", "RT4", "IRT4"};
constexpr std::array<std::string_view, 16> kRoundNames = {
    "INIT", "P",      "G",      "C",        "INV_P", "INV_G",
    "INV_C", "INV_INIT", "PE",  "INV_PE",   "CALC_SUM", "EMBED",
    "RESET", "MIDDLE", "ERASE", "OTHER"};
constexpr std::array<std::string_view, 5> kSectionNames = {
    "NONE", "COMPARATOR", "ADDER", "ERASE", "EMBEDDING"};
constexpr std::array<std::string_view, 4> kTargetNames = {
    "UNKNOWN", "ZERO", "ACCUMULATE", "HOLDS_AND"};
constexpr std::array<std::string_view, 4> kMetricNames = {
    "TOFFOLI", "T", "CNOT", "TOTAL"};

}  // namespace

std::string_view to_string(Role r) { return kRoleNames[static_cast<int>(r)]; }
std::string_view to_string(GateKind k) { return kKindNames[static_cast<int>(k)]; }
std::string_view to_string(Variant v) { return kVariantNames[static_cast<int>(v)]; }
std::string_view to_string(Round r) { return kRoundNames[static_cast<int>(r)]; }
std::string_view to_string(Section s) { return kSectionNames[static_cast<int>(s)]; }
std::string_view to_string(TargetState s) { return kTargetNames[static_cast<int>(s)]; }
std::string_view to_string(Metric m) { return kMetricNames[static_cast<int>(m)]; }

std::optional<Role> parse_role(std::string_view s) { return parse_from<Role>(kRoleNames, s); }
std::optional<GateKind> parse_gate_kind(std::string_view s) {
  return parse_from<GateKind>(kKindNames, s);
}
std::optional<Variant> parse_variant(std::string_view s) {
  return parse_from<Variant>(kVariantNames, s);
}
std::optional<Round> parse_round(std::string_view s) { return parse_from<Round>(kRoundNames, s); }
std::optional<Section> parse_section(std::string_view s) {
  return parse_from<Section>(kSectionNames, s);
}
std::optional<TargetState> parse_target_state(std::string_view s) {
  return parse_from<TargetState>(kTargetNames, s);
}

int arity(GateKind k) {
  switch (k) {
    case GateKind::CNOT:
    case GateKind::CZ:
      return 2;
    case GateKind::Toffoli:
      return 3;
    default:
      return 1;
  }
}

bool is_single_qubit(GateKind k) { return arity(k) == 1 && !is_measurement(k); }

bool is_measurement(GateKind k) {
  return k == GateKind::MeasureXUncompute || k == GateKind::MeasureX ||
         k == GateKind::MeasureZ;
}

RegisterSpan Circuit::add_register(Role role, std::uint32_t size) {
  if (has_register(role))
    throw std::invalid_argument("register declared twice: " + std::string(to_string(role)));
  RegisterSpan span{role, static_cast<WireIndex>(wires_.size()), size};
  registers_.push_back(span);
  for (std::uint32_t i = 0; i < size; ++i) wires_.push_back({role, i});
  return span;
}

void Circuit::grow_last_register(Role role, std::uint32_t new_size) {
  if (registers_.empty() || registers_.back().role != role)
    throw std::invalid_argument("only the last register can grow");
  auto& span = registers_.back();
  for (std::uint32_t i = span.size; i < new_size; ++i) wires_.push_back({role, i});
  span.size = std::max(span.size, new_size);
}

bool Circuit::has_register(Role role) const {
  return std::any_of(registers_.begin(), registers_.end(),
                     [&](const RegisterSpan& s) { return s.role == role; });
}

RegisterSpan Circuit::reg(Role role) const {
  for (const auto& s : registers_)
    if (s.role == role) return s;
  throw std::invalid_argument("no register " + std::string(to_string(role)));
}

WireIndex Circuit::wire(Role role, std::uint32_t offset) const {
  auto s = reg(role);
  if (offset >= s.size)
    throw std::out_of_range("wire offset out of range in " + std::string(to_string(role)));
  return s.start + offset;
}

void Circuit::validate_block(const Block& b, std::size_t num_wires, int num_cbits) {
  if (b.nwires != arity(b.kind))
    throw std::invalid_argument("block arity mismatch for " + std::string(to_string(b.kind)));
  for (int i = 0; i < b.nwires; ++i) {
    if (b.wires[i] >= num_wires) throw std::invalid_argument("block references undeclared wire");
    for (int j = 0; j < i; ++j)
      if (b.wires[i] == b.wires[j]) throw std::invalid_argument("block wires not distinct");
  }
  if (b.kind != GateKind::Toffoli && b.variant != Variant::Plain)
    throw std::invalid_argument("variant set on a non-Toffoli block");
  if (is_measurement(b.kind) && (b.cbit < 0 || b.cbit >= num_cbits))
    throw std::invalid_argument("measurement without a valid classical bit");
  if (!is_measurement(b.kind) && b.cbit != -1)
    throw std::invalid_argument("classical destination on a non-measurement");
  if (b.condition >= num_cbits) throw std::invalid_argument("condition on undeclared bit");
}

void Circuit::append(const Block& b) {
  validate_block(b, wires_.size(), num_cbits_);
  blocks_.push_back(b);
}

void Circuit::append(const Circuit& other) {
  if (!same_layout(other)) throw std::invalid_argument("append: register layouts differ");
  int shift = num_cbits_;
  num_cbits_ += other.num_cbits_;
  for (Block b : other.blocks_) {
    if (b.cbit >= 0) b.cbit += shift;
    if (b.condition >= 0) b.condition += shift;
    blocks_.push_back(b);
  }
}

void Circuit::erase_block(std::size_t i) {
  blocks_.erase(blocks_.begin() + static_cast<std::ptrdiff_t>(i));
}

Circuit Circuit::layout_copy() const {
  Circuit c(n_);
  c.registers_ = registers_;
  c.wires_ = wires_;
  return c;
}

bool Circuit::same_layout(const Circuit& other) const {
  return n_ == other.n_ && registers_ == other.registers_;
}

bool Circuit::has_toffoli() const {
  return std::any_of(blocks_.begin(), blocks_.end(),
                     [](const Block& b) { return b.kind == GateKind::Toffoli; });
}

void Circuit::validate() const {
  for (const auto& b : blocks_) validate_block(b, wires_.size(), num_cbits_);
}

void CircuitBuilder::push(Block b) {
  b.round = round_;
  b.section = section_;
  b.step = step_;
  c_.append(b);
}

void CircuitBuilder::gate1(GateKind k, WireIndex w) {
  Block b;
  b.kind = k;
  b.nwires = 1;
  b.wires[0] = w;
  push(b);
}

void CircuitBuilder::cnot(WireIndex c, WireIndex t) {
  Block b;
  b.kind = GateKind::CNOT;
  b.nwires = 2;
  b.wires = {c, t, 0};
  push(b);
}

void CircuitBuilder::cz(WireIndex a, WireIndex t, int condition) {
  Block b;
  b.kind = GateKind::CZ;
  b.nwires = 2;
  b.wires = {a, t, 0};
  b.condition = condition;
  push(b);
}

void CircuitBuilder::toffoli(WireIndex c1, WireIndex c2, WireIndex t, TargetState ts,
                             Variant v) {
  Block b;
  b.kind = GateKind::Toffoli;
  b.variant = v;
  b.target = ts;
  b.nwires = 3;
  b.wires = {c1, c2, t};
  push(b);
}

std::size_t Dag::num_edges() const {
  std::size_t e = 0;
  for (const auto& p : preds) e += p.size();
  return e;
}

Dag dependency_dag(const Circuit& c) {
  constexpr std::uint32_t kNone = UINT32_MAX;
  Dag dag;
  dag.preds.resize(c.size());
  std::vector<std::uint32_t> last(c.num_wires(), kNone);
  std::vector<std::uint32_t> writer(static_cast<std::size_t>(c.num_cbits()), kNone);
  for (std::uint32_t v = 0; v < c.size(); ++v) {
    const Block& b = c[v];
    auto& p = dag.preds[v];
    auto add = [&](std::uint32_t u) {
      if (u != kNone && std::find(p.begin(), p.end(), u) == p.end()) p.push_back(u);
    };
    for (int i = 0; i < b.nwires; ++i) add(last[b.wires[i]]);
    if (b.condition >= 0) add(writer[b.condition]);
    for (int i = 0; i < b.nwires; ++i) last[b.wires[i]] = v;
    if (b.cbit >= 0) writer[b.cbit] = v;
  }
  return dag;
}

bool matches(Metric m, const Block& b) {
  switch (m) {
    case Metric::Toffoli:
      return b.kind == GateKind::Toffoli;
    case Metric::T:
      return b.kind == GateKind::T || b.kind == GateKind::Tdg;
    case Metric::CNOT:
      return b.kind == GateKind::CNOT || b.kind == GateKind::CZ;
    case Metric::Total:
      return true;
  }
  return false;
}

void require_metric_level(const Circuit& c, Metric m) {
  if ((m == Metric::T || m == Metric::CNOT) && c.has_toffoli())
    throw std::invalid_argument("T/CNOT metrics need a primitive-level circuit");
}

std::int64_t metric_depth(const Circuit& c, Metric m) {
  require_metric_level(c, m);
  // Per-wire finish times give the same longest path as the explicit DAG.
  std::vector<std::int64_t> wire_t(c.num_wires(), 0);
  std::vector<std::int64_t> bit_t(static_cast<std::size_t>(c.num_cbits()), 0);
  std::int64_t best = 0;
  for (const Block& b : c.blocks()) {
    std::int64_t start = 0;
    for (int i = 0; i < b.nwires; ++i) start = std::max(start, wire_t[b.wires[i]]);
    if (b.condition >= 0) start = std::max(start, bit_t[b.condition]);
    std::int64_t fin = start + (matches(m, b) ? 1 : 0);
    for (int i = 0; i < b.nwires; ++i) wire_t[b.wires[i]] = fin;
    if (b.cbit >= 0) bit_t[b.cbit] = fin;
    best = std::max(best, fin);
  }
  return best;
}

std::int64_t count(const Circuit& c, Metric m) {
  require_metric_level(c, m);
  return std::count_if(c.blocks().begin(), c.blocks().end(),
                       [m](const Block& b) { return matches(m, b); });
}

std::int64_t count_kind(const Circuit& c, GateKind k) {
  return std::count_if(c.blocks().begin(), c.blocks().end(),
                       [k](const Block& b) { return b.kind == k; });
}

Round inverse_round(Round r) {
  switch (r) {
    case Round::Init: return Round::InvInit;
    case Round::InvInit: return Round::Init;
    case Round::P: return Round::InvP;
    case Round::InvP: return Round::P;
    case Round::G: return Round::InvG;
    case Round::InvG: return Round::G;
    case Round::C: return Round::InvC;
    case Round::InvC: return Round::C;
    case Round::PE: return Round::InvPE;
    case Round::InvPE: return Round::PE;
    case Round::Embed: return Round::Reset;
    case Round::Reset: return Round::Embed;
    default: return r;
  }
}

namespace {
Variant inverse_variant(Variant v) {
  switch (v) {
    case Variant::Plain:
    case Variant::ST:
      return v;
    case Variant::GRT: return Variant::IGRT;
    case Variant::IGRT: return Variant::GRT;
    case Variant::RT3: return Variant::IRT3;
    case Variant::IRT3: return Variant::RT3;
    case Variant::RT4: return Variant::IRT4;
    case Variant::IRT4: return Variant::RT4;
    default:
      throw std::invalid_argument("PGRT halves have no block inverse");
  }
}
}  // namespace

Block inverse_block(const Block& b) {
  if (is_measurement(b.kind) || b.condition >= 0)
    throw std::invalid_argument("cannot invert measurement or conditioned gate");
  Block r = b;
  r.round = inverse_round(b.round);
  switch (b.kind) {
    case GateKind::S: r.kind = GateKind::Sdg; break;
    case GateKind::Sdg: r.kind = GateKind::S; break;
    case GateKind::T: r.kind = GateKind::Tdg; break;
    case GateKind::Tdg: r.kind = GateKind::T; break;
    case GateKind::Toffoli:
      r.variant = inverse_variant(b.variant);
      if (b.target == TargetState::Zero) r.target = TargetState::HoldsAnd;
      else if (b.target == TargetState::HoldsAnd) r.target = TargetState::Zero;
      break;
    default: break;
  }
  return r;
}

}  // namespace qcla
