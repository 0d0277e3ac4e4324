#pragma once

#include <random>
#include <vector>

#include "qcla/bigint.hpp"
#include "qcla/circuit.hpp"

namespace qcla {

struct ModAddInstance {
  int n = 0;
  BigUInt N = 0;
  BigUInt a = 0;

  void validate() const;  // 0 <= a < N < 2^n
  // 2^n + a - N reduced mod 2^n: the addend when COMP = 1.
  BigUInt sub_value() const;
};

// N uniform in [2^(n-1), 2^n), a uniform in [0, N).
ModAddInstance random_instance(int n, std::mt19937_64& rng);

enum class BitClass : std::uint8_t { Both, OnlySub, OnlyAdd, Neither };

struct EmbedPlan {
  std::vector<BitClass> classes;

  static EmbedPlan from(const ModAddInstance& inst);
  std::vector<int> members(BitClass c) const;
  std::vector<bool> idle() const;  // true on Neither bits
};

enum class Which { First, Last };
enum class Direction { Embed, Reset };

// Register layout of the modular adder: CTRL(1), D(n), B(n), CARRY(n),
// PFUNC(n), COMP(1).
Circuit modadd_layout(int n);

Circuit synth_c_comparator(const ModAddInstance& inst, Which which);
Circuit synth_embed(const ModAddInstance& inst, Direction dir);
Circuit synth_cc_adder(const ModAddInstance& inst);
Circuit synth_modadd(const ModAddInstance& inst);

}  // namespace qcla
