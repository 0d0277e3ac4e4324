#include "qcla/toffoli.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qcla {

MonomialMatrix MonomialMatrix::identity() {
  MonomialMatrix m;
  for (std::uint8_t i = 0; i < 8; ++i) m.image[i] = i;
  return m;
}

MonomialMatrix MonomialMatrix::inverse() const {
  MonomialMatrix r;
  for (std::uint8_t c = 0; c < 8; ++c) {
    r.image[image[c]] = c;
    r.phase[image[c]] = static_cast<std::uint8_t>((8 - phase[c]) % 8);
  }
  return r;
}

MonomialMatrix MonomialMatrix::then(const MonomialMatrix& next) const {
  MonomialMatrix r;
  for (std::uint8_t c = 0; c < 8; ++c) {
    r.image[c] = next.image[image[c]];
    r.phase[c] = static_cast<std::uint8_t>((phase[c] + next.phase[image[c]]) % 8);
  }
  return r;
}

bool MonomialMatrix::is_permutation() const {
  std::array<bool, 8> seen{};
  for (auto i : image) {
    if (i >= 8 || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

namespace {

// Builds a monomial matrix from (column, row, phase) entries that differ from
// the identity.
MonomialMatrix with_entries(std::initializer_list<std::array<int, 3>> entries) {
  MonomialMatrix m = MonomialMatrix::identity();
  for (const auto& e : entries) {
    m.image[e[0]] = static_cast<std::uint8_t>(e[1]);
    m.phase[e[0]] = static_cast<std::uint8_t>(e[2]);
  }
  return m;
}

// Phase exponents: 2 = i, 4 = -1, 6 = -i.
const MonomialMatrix kToffoli = with_entries({{6, 7, 0}, {7, 6, 0}});
const MonomialMatrix kGRT =
    with_entries({{1, 1, 2}, {3, 3, 6}, {5, 5, 6}, {6, 7, 0}, {7, 6, 6}});
const MonomialMatrix kRT3 = with_entries({{5, 5, 4}, {6, 7, 2}, {7, 6, 6}});
const MonomialMatrix kRT4 = with_entries({{6, 7, 6}, {7, 6, 6}});

Block prim(GateKind k, WireIndex a, WireIndex b = 0) {
  Block blk;
  blk.kind = k;
  blk.nwires = static_cast<std::uint8_t>(arity(k));
  blk.wires = {a, b, 0};
  return blk;
}

std::vector<Block> st_template() {
  using G = GateKind;
  return {prim(G::H, 2),       prim(G::CNOT, 1, 2), prim(G::Tdg, 2),     prim(G::CNOT, 0, 2),
          prim(G::T, 2),       prim(G::CNOT, 1, 2), prim(G::Tdg, 2),     prim(G::CNOT, 0, 2),
          prim(G::Tdg, 1),     prim(G::T, 2),       prim(G::CNOT, 0, 1), prim(G::H, 2),
          prim(G::Tdg, 1),     prim(G::CNOT, 0, 1), prim(G::T, 0),       prim(G::S, 1)};
}

std::vector<Block> grt_template() {
  using G = GateKind;
  return {prim(G::H, 2),       prim(G::T, 2),       prim(G::CNOT, 0, 2), prim(G::CNOT, 1, 2),
          prim(G::CNOT, 2, 0), prim(G::CNOT, 2, 1), prim(G::Tdg, 0),     prim(G::Tdg, 1),
          prim(G::T, 2),       prim(G::CNOT, 2, 0), prim(G::CNOT, 2, 1), prim(G::H, 2),
          prim(G::S, 2)};
}

std::vector<Block> igrt_measure_template() {
  Block h = prim(GateKind::H, 2);
  Block m = prim(GateKind::MeasureXUncompute, 2);
  m.cbit = 0;
  Block cz = prim(GateKind::CZ, 0, 1);
  cz.condition = 0;
  return {h, m, cz};
}

std::vector<Block> rt3_template() {
  using G = GateKind;
  return {prim(G::H, 2),   prim(G::T, 2),       prim(G::CNOT, 1, 2), prim(G::Tdg, 2),
          prim(G::CNOT, 0, 2), prim(G::T, 2),   prim(G::CNOT, 1, 2), prim(G::Tdg, 2),
          prim(G::H, 2)};
}

std::vector<Block> rt4_template() {
  auto t = rt3_template();
  t.insert(t.end() - 1, prim(GateKind::CNOT, 0, 2));
  return t;
}

std::vector<Block> inverse_template(const std::vector<Block>& t) {
  std::vector<Block> r;
  r.reserve(t.size());
  for (auto it = t.rbegin(); it != t.rend(); ++it) r.push_back(inverse_block(*it));
  return r;
}

std::vector<Block> pgrt_second_template() {
  std::vector<Block> t{prim(GateKind::CNOT, 2, 3)};
  for (const auto& b : igrt_measure_template()) t.push_back(b);
  return t;
}

std::vector<DecompositionSpec> build_catalog() {
  std::vector<DecompositionSpec> cat;
  auto add = [&](Variant v, int w, std::vector<Block> t, bool has_m, MonomialMatrix m,
                 Validity val) { cat.push_back({v, w, std::move(t), has_m, m, val}); };
  add(Variant::Plain, 3, st_template(), true, kToffoli, Validity::AlwaysPhaseExact);
  add(Variant::ST, 3, st_template(), true, kToffoli, Validity::AlwaysPhaseExact);
  add(Variant::GRT, 3, grt_template(), true, kGRT, Validity::TargetZero);
  add(Variant::IGRT, 3, igrt_measure_template(), true, kGRT.inverse(),
      Validity::PairedUncompute);
  add(Variant::PGRTFirst, 3, grt_template(), false, {}, Validity::TargetZero);
  add(Variant::PGRTSecond, 4, pgrt_second_template(), false, {}, Validity::PairedUncompute);
  add(Variant::RT3, 3, rt3_template(), true, kRT3, Validity::RelativePhaseSafe);
  add(Variant::IRT3, 3, inverse_template(rt3_template()), true, kRT3.inverse(),
      Validity::RelativePhaseSafe);
  add(Variant::RT4, 3, rt4_template(), true, kRT4, Validity::RelativePhaseSafe);
  add(Variant::IRT4, 3, inverse_template(rt4_template()), true, kRT4.inverse(),
      Validity::RelativePhaseSafe);
  return cat;
}

const std::vector<DecompositionSpec>& catalog() {
  static const std::vector<DecompositionSpec> cat = build_catalog();
  return cat;
}

}  // namespace

const DecompositionSpec& decomposition(Variant v) {
  for (const auto& d : catalog())
    if (d.variant == v) return d;
  throw std::invalid_argument("unknown variant");
}

MonomialMatrix variant_matrix(Variant v) {
  const auto& d = decomposition(v);
  if (!d.has_matrix)
    throw std::invalid_argument("PGRT halves have no 3-wire matrix; query GRT/IGRT instead");
  return d.matrix;
}

Variant inverse_of(Variant v) {
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
    case Variant::PGRTFirst: return Variant::PGRTSecond;
    case Variant::PGRTSecond: return Variant::PGRTFirst;
  }
  throw std::invalid_argument("unknown variant");
}

std::vector<Block> expand(Variant v, std::span<const WireIndex> wires, UncomputeMode mode,
                          int cbit) {
  const auto& d = decomposition(v);
  if (static_cast<int>(wires.size()) != d.num_wires)
    throw std::invalid_argument("expand: wrong wire count for " + std::string(to_string(v)));
  const std::vector<Block>* tmpl = &d.primitive_template;
  std::vector<Block> unitary_igrt;
  bool measured = v == Variant::IGRT || v == Variant::PGRTSecond;
  if (measured && mode == UncomputeMode::Unitary) {
    unitary_igrt = inverse_template(grt_template());
    if (v == Variant::PGRTSecond)
      unitary_igrt.insert(unitary_igrt.begin(), prim(GateKind::CNOT, 2, 3));
    tmpl = &unitary_igrt;
    measured = false;
  }
  if (measured && cbit < 0) throw std::invalid_argument("measurement-mode IGRT needs a cbit");
  std::vector<Block> out;
  out.reserve(tmpl->size());
  for (Block b : *tmpl) {
    for (int i = 0; i < b.nwires; ++i) b.wires[i] = wires[b.wires[i]];
    if (b.cbit >= 0) b.cbit = cbit;
    if (b.condition >= 0) b.condition = cbit;
    b.origin = v;
    out.push_back(b);
  }
  return out;
}

int t_cost(Variant v) {
  const auto& t = decomposition(v).primitive_template;
  return static_cast<int>(std::count_if(t.begin(), t.end(),
                                        [](const Block& b) { return matches(Metric::T, b); }));
}

int cnot_cost(Variant v) {
  const auto& t = decomposition(v).primitive_template;
  return static_cast<int>(std::count_if(
      t.begin(), t.end(), [](const Block& b) { return matches(Metric::CNOT, b); }));
}

bool phase_safe(Variant v, const PlacementContext& ctx) {
  const bool mirrored = ctx.section == Section::Comparator && ctx.round != Round::Middle;
  switch (v) {
    case Variant::Plain:
    case Variant::ST:
      return true;
    case Variant::GRT:
    case Variant::PGRTFirst:
      return ctx.compute && ctx.target == TargetState::Zero;
    case Variant::IGRT:
    case Variant::PGRTSecond:
      return !ctx.compute && ctx.target == TargetState::HoldsAnd;
    case Variant::RT3:
      return ctx.compute && (mirrored || (ctx.round == Round::P &&
                                          ctx.target == TargetState::Zero));
    case Variant::IRT3:
      return !ctx.compute && (mirrored || (ctx.round == Round::InvP &&
                                           ctx.target == TargetState::HoldsAnd));
    case Variant::RT4:
      // A carry flips at most once while computed and once while erased.
      return ctx.compute && (mirrored || ctx.round == Round::Init || ctx.round == Round::G ||
                             ctx.round == Round::C);
    case Variant::IRT4:
      return !ctx.compute && (mirrored || ctx.round == Round::InvInit ||
                              ctx.round == Round::InvG || ctx.round == Round::InvC);
  }
  return false;
}

}  // namespace qcla
