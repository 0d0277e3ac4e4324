#pragma once

#include <functional>
#include <vector>

#include "qcla/bigint.hpp"
#include "qcla/circuit.hpp"

namespace qcla {

int floor_log2(std::uint64_t x);
int ceil_log2(std::uint64_t x);

// A dyadic span [lo, hi) split at mid. P nodes write p[lo,hi]; G nodes
// fold p[mid,hi] and c_mid into c_hi; C nodes fold c_lo and p[lo,mid] into
// c_mid.
struct SpanNode {
  int lo;
  int mid;
  int hi;
  bool operator==(const SpanNode&) const = default;
};

struct RoundPlan {
  Round round;
  int t;
  std::vector<SpanNode> nodes;
};

// Unpadded adder rounds on m bits.
std::vector<RoundPlan> p_rounds(int m);
std::vector<RoundPlan> g_rounds(int m);
std::vector<RoundPlan> c_rounds(int m);

// Comparator rounds padded to the next power of two. Nodes whose span
// starts at or beyond n, or whose midpoint is at or beyond n (they alias a
// child), are omitted; hi may exceed n and is clamped when placed.
std::vector<RoundPlan> comparator_p_rounds(int n);
std::vector<RoundPlan> comparator_g_rounds(int n);

// Wire holding p[lo,hi] with hi clamped to n: b_lo for unit spans,
// otherwise PFUNC[mid].
WireIndex p_location(const std::vector<WireIndex>& b, const std::vector<WireIndex>& pfunc,
                     int lo, int hi, int n);

struct AdderWires {
  std::vector<WireIndex> a;
  std::vector<WireIndex> b;
  std::vector<WireIndex> carry;  // carry[i] holds c_{i+1}
  std::vector<WireIndex> pfunc;
};

struct AdderOptions {
  // Drop every gate that only feeds c_n (the sum is then taken mod 2^n).
  bool skip_top_carry = false;
  // Bits where the addend is known to be 0.
  std::vector<bool> idle;
};

// Emits the adder body (Adder section) and the carry erasure (Erase
// section): b <- a + b, with c_n holding the top bit unless skipped.
void emit_adder(CircuitBuilder& out, const AdderWires& w, int n, const AdderOptions& opt = {});

// Registers D (addend a), B, CARRY, PFUNC. Only a quantum addend is
// supported; classical addends go through the comparator and CC-adder.
Circuit synth_adder(int n, bool a_is_quantum = true);

enum class Sense { GEQ, LT };

struct ComparatorWires {
  std::vector<WireIndex> b;
  std::vector<WireIndex> carry;
  std::vector<WireIndex> pfunc;
};

using ResultHook = std::function<void(CircuitBuilder&, WireIndex cn)>;

// Computes [b >= d] (GEQ) or [b < d] (LT) into c_n, runs the hook, then
// uncomputes.
void emit_comparator(CircuitBuilder& out, const ComparatorWires& w, int n, const BigUInt& d,
                     Sense sense, const ResultHook& hook);

// Registers B, CARRY, PFUNC, COMP; the hook is CNOT(c_n -> COMP).
Circuit synth_comparator_skeleton(int n, const BigUInt& d, Sense sense);

}  // namespace qcla
