#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qcla/modadd.hpp"
#include "qcla/resource.hpp"
#include "qcla/sim.hpp"

namespace qcla {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "qcla.report/1";

// Provenance embedded in every JSON document so a table can be rebuilt
// from its own header.
struct RunHeader {
  std::string command;
  std::optional<ModAddInstance> instance;
  int n = 0;
  std::string strategy;
  std::uint64_t seed = 0;
  std::int64_t samples = 0;
};

std::string report_json(const ResourceReport& r, const RunHeader& h);
std::string average_json(const AverageReport& r, const RunHeader& h);
std::string verdict_json(const Verdict& v, const RunHeader& h);
std::string distillation_json(const Distillation& d, const RunHeader& h);

// Per-round breakdown: round, gate, toffolis, per-gate T and CNOT cost,
// then T/CNOT counts and depths of the round.
std::string report_csv(const ResourceReport& r);

}  // namespace qcla
