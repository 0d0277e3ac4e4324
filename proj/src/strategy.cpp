#include "qcla/strategy.hpp"

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace qcla {

namespace {

constexpr std::array<std::string_view, 6> kStrategyNames = {
    "VANMETER_ITOH_REF", "DRAPER_ST", "THAPLIYAL_QUBIT_OPT",
    "THAPLIYAL_T_OPT",   "OURS_FTQ",  "OURS_NISQ"};
constexpr std::array<std::string_view, 10> kAssignmentNames = {
    "ST", "GRT", "IGRT", "PGRT", "GRT", "IGRT", "RT3", "IRT3", "RT4", "IRT4"};

bool is_compute(Round r) {
  switch (r) {
    case Round::InvP:
    case Round::InvG:
    case Round::InvC:
    case Round::InvInit:
    case Round::InvPE:
    case Round::Reset:
      return false;
    default:
      return true;
  }
}

Assignment comparator_rule(Strategy s, Round r) {
  using A = Assignment;
  switch (s) {
    case Strategy::ThapliyalQubitOpt:
      return r == Round::P ? A::GRT : r == Round::InvP ? A::IGRT : A::ST;
    case Strategy::ThapliyalTOpt:
      return r == Round::P ? A::GRT : r == Round::InvP ? A::IGRT : A::PGRT;
    case Strategy::OursFTQ:
      return r == Round::P      ? A::GRT
             : r == Round::InvP ? A::IGRT
             : r == Round::G    ? A::HeldGRT
                                : A::HeldIGRT;
    case Strategy::OursNISQ:
      return is_compute(r) ? A::RT3 : A::IRT3;
    default:
      return A::ST;
  }
}

Assignment adder_rule(Strategy s, Round r) {
  using A = Assignment;
  switch (s) {
    case Strategy::ThapliyalQubitOpt:
      switch (r) {
        case Round::Init:
        case Round::P: return A::GRT;
        case Round::InvP:
        case Round::InvInit: return A::IGRT;
        default: return A::ST;
      }
    case Strategy::ThapliyalTOpt:
    case Strategy::OursFTQ:
      switch (r) {
        case Round::Init:
        case Round::P: return A::GRT;
        case Round::InvP:
        case Round::InvInit: return A::IGRT;
        default: return A::PGRT;
      }
    case Strategy::OursNISQ:
      switch (r) {
        case Round::P: return A::RT3;
        case Round::InvP: return A::IRT3;
        case Round::Init:
        case Round::G:
        case Round::C: return A::RT4;
        default: return A::IRT4;
      }
    default:
      return A::ST;
  }
}

bool toffoli_round(Section sec, Round r) {
  if (sec == Section::Comparator)
    return r == Round::P || r == Round::G || r == Round::InvG || r == Round::InvP;
  if (sec == Section::Adder || sec == Section::Erase)
    return r == Round::Init || r == Round::P || r == Round::G || r == Round::C ||
           r == Round::InvP || r == Round::InvG || r == Round::InvC || r == Round::InvInit;
  return false;
}

Variant variant_of(Assignment a) {
  switch (a) {
    case Assignment::ST: return Variant::ST;
    case Assignment::GRT:
    case Assignment::HeldGRT: return Variant::GRT;
    case Assignment::IGRT:
    case Assignment::HeldIGRT: return Variant::IGRT;
    case Assignment::PGRT: return Variant::PGRTFirst;
    case Assignment::RT3: return Variant::RT3;
    case Assignment::IRT3: return Variant::IRT3;
    case Assignment::RT4: return Variant::RT4;
    case Assignment::IRT4: return Variant::IRT4;
  }
  return Variant::ST;
}

class Assigner {
 public:
  Assigner(const Circuit& in, Strategy s, UncomputeMode mode)
      : in_(in), out_(in.layout_copy()), s_(s), mode_(mode) {
    out_.set_num_cbits(in.num_cbits());
  }

  Circuit run() {
    for (const Block& b : in_.blocks()) {
      if (b.kind != GateKind::Toffoli) {
        out_.append(b);
        continue;
      }
      handle(b);
    }
    if (!held_.empty()) throw std::logic_error("held ancilla never released");
    return std::move(out_);
  }

 private:
  void handle(const Block& b) {
    const Assignment a = assignment_for(s_, b.section, b.round);
    check_safe(a, b);
    const WireIndex c1 = b.wires[0], c2 = b.wires[1], t = b.wires[2];
    switch (a) {
      case Assignment::ST:
      case Assignment::GRT:
      case Assignment::RT3:
      case Assignment::IRT3:
      case Assignment::RT4:
      case Assignment::IRT4: {
        Block r = b;
        r.variant = variant_of(a);
        r.origin = r.variant;
        out_.append(r);
        break;
      }
      case Assignment::IGRT:
        igrt(b, c1, c2, t, Variant::IGRT);
        break;
      case Assignment::PGRT: {
        const WireIndex anc = pooled_ancilla(b);
        toffoli(b, c1, c2, anc, Variant::GRT, Variant::PGRTFirst, TargetState::Zero);
        cnot(b, anc, t, Variant::PGRTSecond);
        igrt(b, c1, c2, anc, Variant::PGRTSecond);
        break;
      }
      case Assignment::HeldGRT: {
        const RegisterSpan d = out_.reg(Role::D);
        if (held_.size() >= d.size) throw std::logic_error("no free D wire to hold an AND");
        const WireIndex anc = d[static_cast<std::uint32_t>(held_.size())];
        held_.push_back({c1, c2, t, anc});
        toffoli(b, c1, c2, anc, Variant::GRT, Variant::GRT, TargetState::Zero);
        cnot(b, anc, t, Variant::GRT);
        break;
      }
      case Assignment::HeldIGRT: {
        if (held_.empty()) throw std::logic_error("inverse gate without a held AND");
        const Held h = held_.back();
        held_.pop_back();
        if (h.c1 != c1 || h.c2 != c2 || h.t != t)
          throw std::logic_error("held AND does not mirror this gate");
        cnot(b, h.anc, t, Variant::IGRT);
        igrt(b, c1, c2, h.anc, Variant::IGRT);
        break;
      }
    }
  }

  void check_safe(Assignment a, const Block& b) {
    PlacementContext ctx{b.round, b.section, is_compute(b.round), b.target};
    bool ok;
    switch (a) {
      case Assignment::PGRT:
      case Assignment::HeldGRT:
      case Assignment::HeldIGRT:
        // The relative phase lands on a fresh wire that the gadget clears.
        ok = phase_safe(Variant::PGRTFirst, {b.round, b.section, true, TargetState::Zero}) &&
             phase_safe(Variant::PGRTSecond,
                        {b.round, b.section, false, TargetState::HoldsAnd});
        break;
      default:
        ok = phase_safe(variant_of(a), ctx);
    }
    if (!ok)
      throw std::logic_error("phase-safety violation: " + std::string(to_string(a)) + " in " +
                             std::string(to_string(b.section)) + "/" +
                             std::string(to_string(b.round)) + " with target " +
                             std::string(to_string(b.target)));
  }

  WireIndex pooled_ancilla(const Block& b) {
    const auto key = std::make_tuple(b.section, b.round, b.step);
    if (!group_ || *group_ != key) {
      group_ = key;
      used_ = 0;
    }
    const std::uint32_t k = used_++;
    if (!out_.has_register(Role::Ancilla)) out_.add_register(Role::Ancilla, 1);
    if (k >= out_.reg(Role::Ancilla).size) out_.grow_last_register(Role::Ancilla, k + 1);
    return out_.wire(Role::Ancilla, k);
  }

  void toffoli(const Block& src, WireIndex c1, WireIndex c2, WireIndex t, Variant v,
               Variant origin, TargetState ts) {
    Block r = src;
    r.kind = GateKind::Toffoli;
    r.variant = v;
    r.origin = origin;
    r.target = ts;
    r.nwires = 3;
    r.wires = {c1, c2, t};
    out_.append(r);
  }

  void cnot(const Block& src, WireIndex c, WireIndex t, Variant origin) {
    Block r = src;
    r.kind = GateKind::CNOT;
    r.variant = Variant::Plain;
    r.origin = origin;
    r.target = TargetState::Unknown;
    r.nwires = 2;
    r.wires = {c, t, 0};
    out_.append(r);
  }

  void igrt(const Block& src, WireIndex c1, WireIndex c2, WireIndex t, Variant origin) {
    if (mode_ == UncomputeMode::Unitary) {
      toffoli(src, c1, c2, t, Variant::IGRT, origin, TargetState::HoldsAnd);
      return;
    }
    const int cbit = out_.add_cbit();
    const std::array<WireIndex, 3> w{c1, c2, t};
    for (Block p : expand(Variant::IGRT, w, UncomputeMode::Measurement, cbit)) {
      p.round = src.round;
      p.section = src.section;
      p.step = src.step;
      p.origin = origin;
      out_.append(p);
    }
  }

  struct Held {
    WireIndex c1, c2, t, anc;
  };

  const Circuit& in_;
  Circuit out_;
  Strategy s_;
  UncomputeMode mode_;
  std::vector<Held> held_;
  std::optional<std::tuple<Section, Round, std::uint16_t>> group_;
  std::uint32_t used_ = 0;
};

}  // namespace

std::string_view to_string(Strategy s) { return kStrategyNames[static_cast<int>(s)]; }

std::optional<Strategy> parse_strategy(std::string_view s) {
  for (std::size_t i = 0; i < kStrategyNames.size(); ++i)
    if (kStrategyNames[i] == s) return static_cast<Strategy>(i);
  return std::nullopt;
}

std::string_view to_string(Assignment a) { return kAssignmentNames[static_cast<int>(a)]; }

Assignment assignment_for(Strategy s, Section section, Round round) {
  if (s == Strategy::VanMeterItohRef)
    throw std::invalid_argument("VANMETER_ITOH_REF is a count model without a circuit");
  if (round == Round::Middle || round == Round::Embed || round == Round::Reset)
    return Assignment::ST;
  if (!toffoli_round(section, round))
    throw std::invalid_argument("Toffoli block without a usable round label: " +
                                std::string(to_string(section)) + "/" +
                                std::string(to_string(round)));
  if (s == Strategy::DraperST) return Assignment::ST;
  return section == Section::Comparator ? comparator_rule(s, round) : adder_rule(s, round);
}

Circuit assign(const Circuit& block_level, Strategy s, UncomputeMode mode) {
  return Assigner(block_level, s, mode).run();
}

Circuit expand_primitives(const Circuit& assigned) {
  Circuit out = assigned.layout_copy();
  out.set_num_cbits(assigned.num_cbits());
  for (const Block& b : assigned.blocks()) {
    if (b.kind != GateKind::Toffoli) {
      out.append(b);
      continue;
    }
    const Variant v = b.variant == Variant::Plain ? Variant::ST : b.variant;
    const std::array<WireIndex, 3> w{b.wires[0], b.wires[1], b.wires[2]};
    for (Block p : expand(v, w, UncomputeMode::Unitary)) {
      p.round = b.round;
      p.section = b.section;
      p.step = b.step;
      p.origin = b.origin == Variant::Plain ? v : b.origin;
      p.condition = b.condition;
      out.append(p);
    }
  }
  return out;
}

Circuit lower(const Circuit& block_level, Strategy s, UncomputeMode mode) {
  return expand_primitives(assign(block_level, s, mode));
}

}  // namespace qcla
