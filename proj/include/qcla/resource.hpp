#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "qcla/circuit.hpp"
#include "qcla/strategy.hpp"
#include "qcla/toffoli.hpp"

namespace qcla {

struct RoundRow {
  std::string label;   // e.g. "C-comp/P", "CC-add/Erase/InvC"
  std::string gate;    // decomposition used, "--" for rounds without Toffolis
  std::int64_t toffolis = 0;
  int t_cost = 0;      // per Toffoli
  int cnot_cost = 0;   // per Toffoli
  std::int64_t t_count = 0;
  std::int64_t cnot_count = 0;
  std::int64_t t_depth = 0;
  std::int64_t cnot_depth = 0;
};

struct ResourceReport {
  int n = 0;
  std::string strategy;
  bool model = false;  // closed-form estimate rather than a synthesized circuit
  std::int64_t toffoli_count = 0;
  std::int64_t t_count = 0;
  std::int64_t cnot_count = 0;
  std::int64_t qubit_count = 0;
  std::int64_t toffoli_depth = 0;
  std::int64_t t_depth = 0;
  std::int64_t cnot_depth = 0;
  std::int64_t kq_t = 0;
  std::int64_t kq_cx = 0;
  // Block level, before decomposition.
  std::int64_t block_cnot_count = 0;
  std::int64_t block_cnot_depth = 0;
  std::vector<RoundRow> per_round;
};

// Counts and depths of a block-level circuit lowered with the strategy.
ResourceReport analyze(const Circuit& block_level, Strategy s,
                       UncomputeMode mode = UncomputeMode::Measurement);

// Count model of the three-adder construction: 30n Toffoli (all ST),
// 4.5n embedding CNOTs, Toffoli depth 12 log n, 4n qubits.
ResourceReport reference_report(int n);

std::string round_label(Section s, Round r);

// Means over random instances (random_instance drawn from a seeded
// mt19937_64); every strategy sees the same instances.
struct AverageReport {
  int n = 0;
  std::string strategy;
  bool model = false;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  double toffoli_count = 0;
  double t_count = 0;
  double cnot_count = 0;
  double qubit_count = 0;
  double toffoli_depth = 0;
  double t_depth = 0;
  double cnot_depth = 0;
  double kq_t = 0;
  double kq_cx = 0;
  double block_cnot_count = 0;
  double block_cnot_depth = 0;
};

std::vector<AverageReport> average_reports(int n, const std::vector<Strategy>& strategies,
                                           std::int64_t samples, std::uint64_t seed);

// T-depth of the construction with T-width n_T.
double model_t_depth(double n, double n_t);
// (4n + (c_g + 1) n_T + 2) * model_t_depth(n, n_T).
double model_kq_t(double n, double n_t, double c_g = 15);
// Closed-form stationary point sqrt(86 / (3 (c_g + 1))) n / sqrt(log2 n).
double closed_form_t_width(double n, double c_g = 15);
// Integer minimizer of model_kq_t over n_T >= 1, seeded by closed_form_t_width.
std::int64_t optimal_t_width(std::int64_t n, double c_g = 15);

inline constexpr std::int64_t kUnboundedWidth = std::numeric_limits<std::int64_t>::max();

// Greedy list scheduling with at most n_t T/Tdg gates per layer; other
// gates take no time. Returns the number of layers holding a T gate.
std::int64_t schedule_t_width(const Circuit& primitive, std::int64_t n_t);

struct Distillation {
  Circuit circuit;
  std::int64_t qubits = 0;
  std::int64_t depth = 0;
  std::int64_t cnot_count = 0;
  std::int64_t measurements = 0;
};

// Fifteen |A> wires: five multi-target CNOT columns, then X/Z measurements
// on all wires but the output.
Distillation synth_distillation();

// Depth where CNOTs sharing a control within one column (same step) form a
// single multi-target gate.
std::int64_t fanout_depth(const Circuit& c);

}  // namespace qcla
