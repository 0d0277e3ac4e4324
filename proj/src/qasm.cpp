#include "qcla/qasm.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcla {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      const auto part = trim(s.substr(start, i - start));
      if (!part.empty()) out.push_back(part);
      start = i + 1;
    }
  }
  return out;
}

std::string wire_ref(const Circuit& c, WireIndex w) {
  const Wire& wi = c.wires()[w];
  return lower(to_string(wi.role)) + "[" + std::to_string(wi.offset) + "]";
}

const char* gate_word(GateKind k) {
  switch (k) {
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::Z: return "z";
    case GateKind::CNOT: return "cx";
    case GateKind::CZ: return "cz";
    default: return nullptr;
  }
}

std::optional<GateKind> parse_gate_word(std::string_view w) {
  static const std::pair<std::string_view, GateKind> table[] = {
      {"x", GateKind::X},     {"h", GateKind::H},   {"s", GateKind::S},
      {"sdg", GateKind::Sdg}, {"t", GateKind::T},   {"tdg", GateKind::Tdg},
      {"z", GateKind::Z},     {"cx", GateKind::CNOT}, {"cz", GateKind::CZ}};
  for (const auto& [name, k] : table)
    if (name == w) return k;
  return std::nullopt;
}

std::string meta(const Block& b, bool force) {
  std::ostringstream os;
  const Block def{};
  if (force || b.round != def.round) os << " round=" << to_string(b.round);
  if (force || b.section != def.section) os << " section=" << to_string(b.section);
  if (b.step != 0) os << " step=" << b.step;
  if (b.target != def.target) os << " target=" << to_string(b.target);
  if (b.origin != def.origin) os << " origin=" << to_string(b.origin);
  return os.str();
}

std::int64_t to_int(std::string_view s, int line) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end)
    throw std::invalid_argument("qasm line " + std::to_string(line) + ": bad integer '" +
                                std::string(s) + "'");
  return v;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Circuit run() {
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      const std::size_t nl = text_.find('\n', pos);
      const std::size_t end = nl == std::string_view::npos ? text_.size() : nl;
      ++line_;
      handle(trim(text_.substr(pos, end - pos)));
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    if (!layout_done_) finish_layout();
    c_.validate();
    return std::move(c_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("qasm line " + std::to_string(line_) + ": " + what);
  }

  void handle(std::string_view line) {
    if (line.empty()) return;
    std::string_view code = line, comment;
    if (const auto cpos = line.find("//"); cpos != std::string_view::npos) {
      code = trim(line.substr(0, cpos));
      comment = trim(line.substr(cpos + 2));
    }
    if (code.empty()) {
      if (comment.starts_with("qcla ")) header(comment.substr(5));
      else if (comment.starts_with("tof ")) toffoli(comment.substr(4));
      return;
    }
    if (code.starts_with("OPENQASM") || code.starts_with("include")) return;
    if (code.starts_with("qreg ")) return declare(code.substr(5), true);
    if (code.starts_with("creg ")) return declare(code.substr(5), false);
    if (!layout_done_) finish_layout();
    std::string_view fields;
    if (comment.starts_with("@")) fields = comment.substr(1);
    gate_line(code, fields);
  }

  void header(std::string_view rest) {
    for (auto kv : split(rest, ' ')) {
      const auto eq = kv.find('=');
      if (eq == std::string_view::npos) fail("bad header field");
      const auto key = kv.substr(0, eq), val = kv.substr(eq + 1);
      if (key == "n") {
        n_ = static_cast<int>(to_int(val, line_));
      } else if (key == "cbits") {
        cbits_ = static_cast<int>(to_int(val, line_));
      } else if (key == "layout") {
        layout_.clear();
        for (auto item : split(val, ',')) {
          const auto colon = item.find(':');
          const auto role = parse_role(item.substr(0, colon));
          if (!role || colon == std::string_view::npos) fail("bad layout entry");
          layout_.push_back({*role, static_cast<std::uint32_t>(to_int(item.substr(colon + 1), line_))});
        }
        have_header_layout_ = true;
      }
    }
  }

  void declare(std::string_view decl, bool quantum) {
    decl = trim(decl);
    if (decl.ends_with(";")) decl.remove_suffix(1);
    const auto br = decl.find('[');
    if (br == std::string_view::npos || !decl.ends_with("]")) fail("bad register declaration");
    const auto name = decl.substr(0, br);
    const auto size = to_int(decl.substr(br + 1, decl.size() - br - 2), line_);
    if (quantum) {
      if (have_header_layout_) return;
      const auto role = parse_role(upper(name));
      if (!role) fail("unknown register '" + std::string(name) + "'");
      layout_.push_back({*role, static_cast<std::uint32_t>(size)});
    } else {
      ++creg_count_;
    }
  }

  void finish_layout() {
    c_ = Circuit(n_);
    for (const auto& [role, size] : layout_) c_.add_register(role, size);
    c_.set_num_cbits(cbits_ >= 0 ? cbits_ : creg_count_);
    layout_done_ = true;
  }

  WireIndex wire(std::string_view ref) {
    ref = trim(ref);
    const auto br = ref.find('[');
    if (br == std::string_view::npos || !ref.ends_with("]")) fail("bad qubit '" + std::string(ref) + "'");
    const auto role = parse_role(upper(ref.substr(0, br)));
    if (!role || !c_.has_register(*role)) fail("unknown register in '" + std::string(ref) + "'");
    const auto idx = to_int(ref.substr(br + 1, ref.size() - br - 2), line_);
    if (idx < 0 || idx >= static_cast<std::int64_t>(c_.reg(*role).size)) fail("qubit index out of range");
    return c_.wire(*role, static_cast<std::uint32_t>(idx));
  }

  int cbit(std::string_view ref) {
    ref = trim(ref);
    if (!ref.starts_with("m")) fail("bad classical bit '" + std::string(ref) + "'");
    const auto br = ref.find('[');
    return static_cast<int>(to_int(ref.substr(1, br == std::string_view::npos ? br : br - 1), line_));
  }

  void apply_fields(Block& b, std::string_view fields) {
    for (auto kv : split(fields, ' ')) {
      const auto eq = kv.find('=');
      if (eq == std::string_view::npos) fail("bad metadata field");
      const auto key = kv.substr(0, eq), val = kv.substr(eq + 1);
      bool ok = true;
      if (key == "round") {
        const auto r = parse_round(val);
        ok = r.has_value();
        if (ok) b.round = *r;
      } else if (key == "section") {
        const auto s = parse_section(val);
        ok = s.has_value();
        if (ok) b.section = *s;
      } else if (key == "target") {
        const auto t = parse_target_state(val);
        ok = t.has_value();
        if (ok) b.target = *t;
      } else if (key == "origin") {
        const auto v = parse_variant(val);
        ok = v.has_value();
        if (ok) b.origin = *v;
      } else if (key == "step") {
        b.step = static_cast<std::uint16_t>(to_int(val, line_));
      } else {
        fail("unknown metadata key '" + std::string(key) + "'");
      }
      if (!ok) fail("bad value for '" + std::string(key) + "'");
    }
  }

  void toffoli(std::string_view rest) {
    if (!layout_done_) finish_layout();
    const auto parts = split(rest, ' ');
    if (parts.size() < 2) fail("bad tof pseudo-op");
    const auto v = parse_variant(parts[0]);
    if (!v) fail("unknown Toffoli variant '" + std::string(parts[0]) + "'");
    const auto qs = split(parts[1], ',');
    if (qs.size() != 3) fail("tof needs three qubits");
    Block b;
    b.kind = GateKind::Toffoli;
    b.variant = *v;
    b.nwires = 3;
    for (int i = 0; i < 3; ++i) b.wires[i] = wire(qs[i]);
    const auto fpos = rest.find(parts[1]) + parts[1].size();
    apply_fields(b, rest.substr(fpos));
    c_.append(b);
  }

  void gate_line(std::string_view code, std::string_view fields) {
    Block b;
    std::vector<std::string_view> stmts = split(code, ';');
    if (stmts.empty()) fail("empty statement");
    if (stmts[0].starts_with("if(")) {
      const auto close = stmts[0].find(')');
      const auto cond = stmts[0].substr(3, close - 3);
      const auto eq = cond.find("==");
      if (close == std::string_view::npos || eq == std::string_view::npos ||
          trim(cond.substr(eq + 2)) != "1")
        fail("unsupported condition");
      b.condition = cbit(cond.substr(0, eq));
      stmts[0] = trim(stmts[0].substr(close + 1));
    }
    auto word_of = [](std::string_view s) { return s.substr(0, s.find(' ')); };
    auto args_of = [](std::string_view s) {
      const auto sp = s.find(' ');
      return sp == std::string_view::npos ? std::string_view{} : trim(s.substr(sp + 1));
    };
    auto measure = [&](std::string_view args) {
      const auto arrow = args.find("->");
      if (arrow == std::string_view::npos) fail("measure without target");
      b.nwires = 1;
      b.wires[0] = wire(args.substr(0, arrow));
      b.cbit = cbit(args.substr(arrow + 2));
    };
    const auto w0 = word_of(stmts[0]);
    if (stmts.size() == 1 && w0 == "measure") {
      b.kind = GateKind::MeasureZ;
      measure(args_of(stmts[0]));
    } else if (stmts.size() == 2 && w0 == "measure" && word_of(stmts[1]) == "reset") {
      b.kind = GateKind::MeasureXUncompute;
      measure(args_of(stmts[0]));
      if (wire(args_of(stmts[1])) != b.wires[0]) fail("reset on a different qubit");
    } else if (stmts.size() == 2 && w0 == "h" && word_of(stmts[1]) == "measure") {
      b.kind = GateKind::MeasureX;
      measure(args_of(stmts[1]));
      if (wire(args_of(stmts[0])) != b.wires[0]) fail("h on a different qubit");
    } else if (stmts.size() == 1) {
      const auto k = parse_gate_word(w0);
      if (!k) fail("unsupported gate '" + std::string(w0) + "'");
      b.kind = *k;
      const auto qs = split(args_of(stmts[0]), ',');
      if (static_cast<int>(qs.size()) != arity(*k)) fail("wrong number of qubits");
      b.nwires = static_cast<std::uint8_t>(qs.size());
      for (std::size_t i = 0; i < qs.size(); ++i) b.wires[i] = wire(qs[i]);
    } else {
      fail("unsupported statement sequence");
    }
    apply_fields(b, fields);
    c_.append(b);
  }

  std::string_view text_;
  int line_ = 0;
  int n_ = 0;
  int cbits_ = -1;
  int creg_count_ = 0;
  bool have_header_layout_ = false;
  bool layout_done_ = false;
  std::vector<std::pair<Role, std::uint32_t>> layout_;
  Circuit c_;
};

}  // namespace

std::string to_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  os << "// qcla n=" << c.n() << " cbits=" << c.num_cbits() << " layout=";
  for (std::size_t i = 0; i < c.registers().size(); ++i) {
    const auto& r = c.registers()[i];
    os << (i ? "," : "") << to_string(r.role) << ":" << r.size;
  }
  os << "\n";
  for (const auto& r : c.registers())
    if (r.size > 0) os << "qreg " << lower(to_string(r.role)) << "[" << r.size << "];\n";
  for (int k = 0; k < c.num_cbits(); ++k) os << "creg m" << k << "[1];\n";
  for (const Block& b : c.blocks()) {
    if (b.kind == GateKind::Toffoli) {
      os << "// tof " << to_string(b.variant) << " " << wire_ref(c, b.wires[0]) << ","
         << wire_ref(c, b.wires[1]) << "," << wire_ref(c, b.wires[2]) << meta(b, true) << "\n";
      continue;
    }
    if (b.condition >= 0) os << "if(m" << b.condition << "==1) ";
    const std::string q0 = wire_ref(c, b.wires[0]);
    switch (b.kind) {
      case GateKind::MeasureXUncompute:
        os << "measure " << q0 << " -> m" << b.cbit << "[0]; reset " << q0 << ";";
        break;
      case GateKind::MeasureZ:
        os << "measure " << q0 << " -> m" << b.cbit << "[0];";
        break;
      case GateKind::MeasureX:
        os << "h " << q0 << "; measure " << q0 << " -> m" << b.cbit << "[0];";
        break;
      default:
        os << gate_word(b.kind) << " " << q0;
        for (int i = 1; i < b.nwires; ++i) os << "," << wire_ref(c, b.wires[i]);
        os << ";";
    }
    const std::string m = meta(b, false);
    if (!m.empty()) os << " // @" << m;
    os << "\n";
  }
  return os.str();
}

Circuit parse_qasm(std::string_view text) { return Parser(text).run(); }

}  // namespace qcla
