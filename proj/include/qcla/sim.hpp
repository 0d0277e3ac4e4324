#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcla/bigint.hpp"
#include "qcla/circuit.hpp"
#include "qcla/modadd.hpp"
#include "qcla/toffoli.hpp"

namespace qcla {

enum class Strategy : std::uint8_t;

struct SimState {
  std::vector<std::uint8_t> bits;
  std::uint8_t phase_exp = 0;  // global phase exp(i*pi*phase_exp/4)
  std::vector<std::uint8_t> cbits;
};

// Exact basis-state simulation. Supports X, Z, S, Sdg, T, Tdg, CNOT, CZ,
// Toffoli variants, MeasureZ, and H only when the next block is a
// MeasureXUncompute on the same wire. Throws std::invalid_argument otherwise.
SimState run_monomial(const Circuit& c, std::vector<std::uint8_t> input, std::uint64_t seed);

inline constexpr std::size_t kMaxStatevectorWires = 20;

using Amplitudes = std::vector<std::complex<double>>;

// Dense simulation of a primitive circuit. Wire w is bit w of the basis
// index. Measurement outcomes use the same seeded draw as run_monomial;
// an outcome of zero probability is replaced by the other one.
Amplitudes run_statevector(const Circuit& c, const Amplitudes& input, std::uint64_t seed,
                           std::vector<std::uint8_t>* cbits = nullptr);
Amplitudes basis_state(std::size_t num_wires, const std::vector<std::uint8_t>& bits);
std::uint64_t basis_index(const std::vector<std::uint8_t>& bits);

// Register helpers for modular-adder layouts.
void set_register(std::vector<std::uint8_t>& bits, const RegisterSpan& r, const BigUInt& v);
BigUInt get_register(const std::vector<std::uint8_t>& bits, const RegisterSpan& r);
std::vector<std::uint8_t> modadd_input(const Circuit& c, bool x, const BigUInt& b);

struct Counterexample {
  bool x = false;
  BigUInt b = 0;
  BigUInt expected = 0;
  BigUInt got = 0;
  std::uint8_t phase_exp = 0;
  bool ancillas_clean = true;
  bool ctrl_intact = true;
  std::string reason;
};

struct Verdict {
  bool passed = true;
  std::int64_t cases = 0;
  std::uint64_t seed = 0;
  std::string rng = kRngAlgorithm;
  std::optional<Counterexample> failure;
};

struct VerifyMode {
  bool exhaustive = true;
  std::int64_t samples = 0;
  static VerifyMode all() { return {true, 0}; }
  static VerifyMode sampled(std::int64_t k) { return {false, k}; }
};

// Checks a modular-adder circuit (block or assigned level) on valid inputs.
Verdict verify_circuit(const Circuit& c, const ModAddInstance& inst, VerifyMode mode,
                       std::uint64_t seed);

// Synthesizes, assigns decompositions for the strategy, and verifies.
Verdict verify_functional(const ModAddInstance& inst, Strategy strategy, VerifyMode mode,
                          std::uint64_t seed,
                          UncomputeMode uncompute = UncomputeMode::Measurement);

}  // namespace qcla
