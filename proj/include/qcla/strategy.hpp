#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "qcla/circuit.hpp"
#include "qcla/toffoli.hpp"

namespace qcla {

enum class Strategy : std::uint8_t {
  VanMeterItohRef,
  DraperST,
  ThapliyalQubitOpt,
  ThapliyalTOpt,
  OursFTQ,
  OursNISQ,
};

inline constexpr std::array<Strategy, 6> kAllStrategies = {
    Strategy::VanMeterItohRef, Strategy::DraperST, Strategy::ThapliyalQubitOpt,
    Strategy::ThapliyalTOpt,   Strategy::OursFTQ,  Strategy::OursNISQ};

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view s);

// How one block-level Toffoli is realized.
enum class Assignment : std::uint8_t {
  ST,
  GRT,
  IGRT,
  PGRT,      // GRT into a pooled ancilla, CNOT into the target, IGRT
  HeldGRT,   // GRT into a D-register wire kept until the mirrored gate
  HeldIGRT,  // CNOT from the held wire, then IGRT
  RT3,
  IRT3,
  RT4,
  IRT4,
};

std::string_view to_string(Assignment a);

// Throws std::invalid_argument for the count-only reference strategy and
// for blocks without a usable round label.
Assignment assignment_for(Strategy s, Section section, Round round);

// Variant-level circuit: every Toffoli carries its decomposition, PGRT and
// held-ancilla gadgets are spelled out, and in measurement mode every IGRT
// is already H + measure + conditional CZ. Runs on the monomial simulator.
// Throws std::logic_error when an assignment violates phase_safe.
Circuit assign(const Circuit& block_level, Strategy s, UncomputeMode mode);

// Expands the remaining Toffoli blocks into primitive gates.
Circuit expand_primitives(const Circuit& assigned);

// assign + expand_primitives.
Circuit lower(const Circuit& block_level, Strategy s,
              UncomputeMode mode = UncomputeMode::Measurement);

}  // namespace qcla
