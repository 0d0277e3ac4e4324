#include "qcla/report.hpp"

#include <sstream>

#include "json.hpp"

namespace qcla {

namespace {

using nlohmann::ordered_json;

ordered_json header_json(const RunHeader& h) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["version"] = kVersion;
  j["command"] = h.command;
  ordered_json inst;
  inst["n"] = h.instance ? h.instance->n : h.n;
  if (h.instance) {
    inst["N"] = to_string(h.instance->N);
    inst["a"] = to_string(h.instance->a);
  }
  j["instance"] = inst;
  if (!h.strategy.empty()) j["strategy"] = h.strategy;
  j["seed"] = h.seed;
  j["rng"] = kRngAlgorithm;
  if (h.samples > 0) j["samples"] = h.samples;
  return j;
}

}  // namespace

std::string report_json(const ResourceReport& r, const RunHeader& h) {
  ordered_json j = header_json(h);
  ordered_json m;
  m["model"] = r.model;
  m["toffoli_count"] = r.toffoli_count;
  m["t_count"] = r.t_count;
  m["cnot_count"] = r.cnot_count;
  m["qubit_count"] = r.qubit_count;
  m["toffoli_depth"] = r.toffoli_depth;
  m["t_depth"] = r.t_depth;
  m["cnot_depth"] = r.cnot_depth;
  m["kq_t"] = r.kq_t;
  m["kq_cx"] = r.kq_cx;
  m["block_cnot_count"] = r.block_cnot_count;
  m["block_cnot_depth"] = r.block_cnot_depth;
  j["metrics"] = m;
  ordered_json rows = ordered_json::array();
  for (const RoundRow& row : r.per_round) {
    ordered_json x;
    x["round"] = row.label;
    x["gate"] = row.gate;
    x["toffolis"] = row.toffolis;
    x["t_cost"] = row.t_cost;
    x["cnot_cost"] = row.cnot_cost;
    x["t_count"] = row.t_count;
    x["cnot_count"] = row.cnot_count;
    x["t_depth"] = row.t_depth;
    x["cnot_depth"] = row.cnot_depth;
    rows.push_back(std::move(x));
  }
  j["per_round"] = rows;
  return j.dump(2);
}

std::string average_json(const AverageReport& r, const RunHeader& h) {
  ordered_json j = header_json(h);
  ordered_json m;
  m["model"] = r.model;
  m["toffoli_count"] = r.toffoli_count;
  m["t_count"] = r.t_count;
  m["cnot_count"] = r.cnot_count;
  m["qubit_count"] = r.qubit_count;
  m["toffoli_depth"] = r.toffoli_depth;
  m["t_depth"] = r.t_depth;
  m["cnot_depth"] = r.cnot_depth;
  m["kq_t"] = r.kq_t;
  m["kq_cx"] = r.kq_cx;
  m["block_cnot_count"] = r.block_cnot_count;
  m["block_cnot_depth"] = r.block_cnot_depth;
  m["t_count_per_n"] = r.t_count / r.n;
  m["cnot_count_per_n"] = r.cnot_count / r.n;
  j["mean"] = m;
  return j.dump(2);
}

std::string verdict_json(const Verdict& v, const RunHeader& h) {
  ordered_json j = header_json(h);
  j["passed"] = v.passed;
  j["cases"] = v.cases;
  if (v.failure) {
    const Counterexample& f = *v.failure;
    ordered_json c;
    c["x"] = f.x;
    c["b"] = to_string(f.b);
    c["expected"] = to_string(f.expected);
    c["got"] = to_string(f.got);
    c["phase_exp"] = f.phase_exp;
    c["ancillas_clean"] = f.ancillas_clean;
    c["ctrl_intact"] = f.ctrl_intact;
    c["reason"] = f.reason;
    j["failure"] = c;
  } else {
    j["failure"] = nullptr;
  }
  return j.dump(2);
}

std::string distillation_json(const Distillation& d, const RunHeader& h) {
  ordered_json j = header_json(h);
  j["qubits"] = d.qubits;
  j["depth"] = d.depth;
  j["cnot_count"] = d.cnot_count;
  j["measurements"] = d.measurements;
  return j.dump(2);
}

std::string report_csv(const ResourceReport& r) {
  std::ostringstream os;
  os << "round,gate,toffolis,t_cost,cnot_cost,t_count,cnot_count,t_depth,cnot_depth\n";
  for (const RoundRow& row : r.per_round)
    os << row.label << "," << row.gate << "," << row.toffolis << "," << row.t_cost << ","
       << row.cnot_cost << "," << row.t_count << "," << row.cnot_count << "," << row.t_depth
       << "," << row.cnot_depth << "\n";
  return os.str();
}

}  // namespace qcla
