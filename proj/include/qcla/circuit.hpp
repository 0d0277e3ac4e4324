#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string_view>
#include <vector>

namespace qcla {

using WireIndex = std::uint32_t;

enum class Role : std::uint8_t { Ctrl, D, B, Carry, PFunc, Comp, Ancilla, Magic };

enum class GateKind : std::uint8_t {
  X,
  H,
  S,
  Sdg,
  T,
  Tdg,
  Z,
  CNOT,
  CZ,
  MeasureXUncompute,  // measure and reset to |0>; after H this is the X-basis uncompute
  MeasureX,
  MeasureZ,
  Toffoli,
};

enum class Variant : std::uint8_t {
  Plain,
  ST,
  GRT,
  IGRT,
  PGRTFirst,
  PGRTSecond,
  RT3,
  IRT3,
  RT4,
  IRT4,
};

enum class Round : std::uint8_t {
  Init,
  P,
  G,
  C,
  InvP,
  InvG,
  InvC,
  InvInit,
  PE,
  InvPE,
  CalcSum,
  Embed,
  Reset,
  Middle,
  Erase,
  Other,
};

// Which part of the construction a block belongs to. Round labels repeat
// across the comparators, the adder body and the carry-erasure section.
enum class Section : std::uint8_t { None, Comparator, Adder, Erase, Embedding };

// Synthesis-time knowledge about the target of a Toffoli block.
enum class TargetState : std::uint8_t {
  Unknown,
  Zero,        // target is |0> before the gate
  Accumulate,  // target holds an arbitrary value
  HoldsAnd,    // target equals c1 AND c2 (the gate uncomputes it)
};

enum class Metric : std::uint8_t { Toffoli, T, CNOT, Total };

std::string_view to_string(Role r);
std::string_view to_string(GateKind k);
std::string_view to_string(Variant v);
std::string_view to_string(Round r);
std::string_view to_string(Section s);
std::string_view to_string(TargetState s);
std::string_view to_string(Metric m);

std::optional<Role> parse_role(std::string_view s);
std::optional<GateKind> parse_gate_kind(std::string_view s);
std::optional<Variant> parse_variant(std::string_view s);
std::optional<Round> parse_round(std::string_view s);
std::optional<Section> parse_section(std::string_view s);
std::optional<TargetState> parse_target_state(std::string_view s);

// Number of wires a gate kind acts on (Toffoli: 3).
int arity(GateKind k);
bool is_single_qubit(GateKind k);
bool is_measurement(GateKind k);

struct Block {
  GateKind kind = GateKind::X;
  Variant variant = Variant::Plain;  // Toffoli blocks only
  Variant origin = Variant::Plain;   // decomposition a primitive came from
  Round round = Round::Other;
  Section section = Section::None;
  TargetState target = TargetState::Unknown;
  std::uint8_t nwires = 0;
  std::array<WireIndex, 3> wires{};  // controls first, target last
  std::int32_t cbit = -1;            // measurement result destination
  std::int32_t condition = -1;       // executes only if this bit is 1
  std::uint16_t step = 0;            // round parameter t

  WireIndex target_wire() const { return wires[nwires - 1]; }
  bool operator==(const Block&) const = default;
};

struct Wire {
  Role role;
  std::uint32_t offset;
  bool operator==(const Wire&) const = default;
};

struct RegisterSpan {
  Role role;
  WireIndex start;
  std::uint32_t size;
  WireIndex operator[](std::uint32_t i) const { return start + i; }
  bool operator==(const RegisterSpan&) const = default;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n) : n_(n) {}

  int n() const { return n_; }

  // Registers are contiguous and laid out in declaration order. Each role
  // may be declared once.
  RegisterSpan add_register(Role role, std::uint32_t size);
  // Enlarges the last declared register.
  void grow_last_register(Role role, std::uint32_t new_size);
  bool has_register(Role role) const;
  RegisterSpan reg(Role role) const;
  const std::vector<RegisterSpan>& registers() const { return registers_; }
  WireIndex wire(Role role, std::uint32_t offset) const;

  std::size_t num_wires() const { return wires_.size(); }
  const std::vector<Wire>& wires() const { return wires_; }

  int num_cbits() const { return num_cbits_; }
  int add_cbit() { return num_cbits_++; }
  void set_num_cbits(int k) { num_cbits_ = k; }

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }
  const Block& operator[](std::size_t i) const { return blocks_[i]; }

  void append(const Block& b);
  void append(const Circuit& other);  // same register layout required
  void erase_block(std::size_t i);
  void clear_blocks() { blocks_.clear(); }

  // Copy of the register layout without blocks.
  Circuit layout_copy() const;
  bool same_layout(const Circuit& other) const;

  bool has_toffoli() const;

  // Throws std::invalid_argument on arity, wire range or cbit errors.
  void validate() const;
  static void validate_block(const Block& b, std::size_t num_wires, int num_cbits);

 private:
  int n_ = 0;
  std::vector<RegisterSpan> registers_;
  std::vector<Wire> wires_;
  std::vector<Block> blocks_;
  int num_cbits_ = 0;
};

// Appends blocks with a current round/section context.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(Circuit& c) : c_(c) {}

  CircuitBuilder& at(Section s, Round r, int step = 0) {
    section_ = s;
    round_ = r;
    step_ = static_cast<std::uint16_t>(step);
    return *this;
  }
  Section section() const { return section_; }
  Round round() const { return round_; }

  void gate1(GateKind k, WireIndex w);
  void x(WireIndex w) { gate1(GateKind::X, w); }
  void cnot(WireIndex c, WireIndex t);
  void cz(WireIndex a, WireIndex b, int condition = -1);
  void toffoli(WireIndex c1, WireIndex c2, WireIndex t, TargetState ts,
               Variant v = Variant::Plain);
  void push(Block b);

  Circuit& circuit() { return c_; }

 private:
  Circuit& c_;
  Section section_ = Section::None;
  Round round_ = Round::Other;
  std::uint16_t step_ = 0;
};

// Block dependency graph: predecessor lists per block. Edge u->v when u is
// the last earlier block on a wire of v, or u measured the bit v is
// conditioned on. This is a subgraph of the full shared-wire relation with
// the same transitive closure.
struct Dag {
  std::vector<std::vector<std::uint32_t>> preds;
  std::size_t num_edges() const;
};

Dag dependency_dag(const Circuit& c);

bool matches(Metric m, const Block& b);
// Throws for T/CNOT metrics when Toffoli blocks are present.
void require_metric_level(const Circuit& c, Metric m);

// Max over DAG paths of the number of blocks matching the metric.
std::int64_t metric_depth(const Circuit& c, Metric m);
std::int64_t count(const Circuit& c, Metric m);
std::int64_t count_kind(const Circuit& c, GateKind k);

// Inverse of a block list: reverse order, each gate replaced by its inverse.
// Measurements and conditioned gates are rejected.
Block inverse_block(const Block& b);
Round inverse_round(Round r);

}  // namespace qcla
