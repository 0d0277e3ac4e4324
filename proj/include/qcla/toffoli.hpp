#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qcla/circuit.hpp"

namespace qcla {

enum class UncomputeMode : std::uint8_t { Unitary, Measurement };

// 8x8 monomial matrix on basis |q1 q2 q3> (q1 is the high bit). Column c
// maps to row image[c] with phase exp(i*pi*phase[c]/4).
struct MonomialMatrix {
  std::array<std::uint8_t, 8> image{};
  std::array<std::uint8_t, 8> phase{};

  static MonomialMatrix identity();
  MonomialMatrix inverse() const;
  // Applies this, then next.
  MonomialMatrix then(const MonomialMatrix& next) const;
  bool is_permutation() const;
  bool operator==(const MonomialMatrix&) const = default;
};

enum class Validity : std::uint8_t {
  AlwaysPhaseExact,
  TargetZero,
  PairedUncompute,
  RelativePhaseSafe,
};

struct DecompositionSpec {
  Variant variant;
  int num_wires;
  // Template over abstract wires 0..num_wires-1. For measurement-mode IGRT
  // the measurement writes classical bit 0 and the CZ is conditioned on it.
  std::vector<Block> primitive_template;
  bool has_matrix;
  MonomialMatrix matrix;
  Validity validity;
};

// Catalog entry. IGRT's template is the measurement form.
const DecompositionSpec& decomposition(Variant v);

MonomialMatrix variant_matrix(Variant v);

Variant inverse_of(Variant v);

// Primitive expansion on concrete wires (controls first, target last).
// PGRT_FIRST takes (c1, c2, ancilla); PGRT_SECOND takes (c1, c2, ancilla,
// carry). `cbit` is the classical bit used by measurement-mode IGRT.
std::vector<Block> expand(Variant v, std::span<const WireIndex> wires, UncomputeMode mode,
                          int cbit = -1);

// Number of T/Tdg and CNOT/CZ gates in the counted (measurement) expansion.
int t_cost(Variant v);
int cnot_cost(Variant v);

struct PlacementContext {
  Round round = Round::Other;
  Section section = Section::None;
  bool compute = true;  // false for the uncompute half of a mirrored pair
  TargetState target = TargetState::Unknown;
};

// Placement rules for relative-phase variants.
bool phase_safe(Variant v, const PlacementContext& ctx);

}  // namespace qcla
