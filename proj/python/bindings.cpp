#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcla/modadd.hpp"
#include "qcla/qasm.hpp"
#include "qcla/report.hpp"
#include "qcla/resource.hpp"
#include "qcla/sim.hpp"
#include "qcla/strategy.hpp"

namespace py = pybind11;
using namespace qcla;

namespace {

// Python ints of any size cross the boundary as decimal strings.
BigUInt to_big(const py::int_& v) {
  if (v < py::int_(0)) throw py::value_error("negative value");
  return parse_biguint(py::str(v));
}

py::int_ to_py(const BigUInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_string(v).c_str(), nullptr, 10));
}

ModAddInstance instance(int n, const py::int_& N, const py::int_& a) {
  ModAddInstance inst{n, to_big(N), to_big(a)};
  inst.validate();
  return inst;
}

Strategy strategy(const std::string& s) {
  const auto st = parse_strategy(s);
  if (!st) throw py::value_error("unknown strategy '" + s + "'");
  return *st;
}

Metric metric(const std::string& m) {
  if (m == "toffoli") return Metric::Toffoli;
  if (m == "t") return Metric::T;
  if (m == "cnot") return Metric::CNOT;
  if (m == "total") return Metric::Total;
  throw py::value_error("metric must be toffoli, t, cnot or total");
}

UncomputeMode mode(bool unitary) {
  return unitary ? UncomputeMode::Unitary : UncomputeMode::Measurement;
}

py::object json_loads(const std::string& s) { return py::module_::import("json").attr("loads")(s); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Control modular adders on a carry-lookahead adder";
  m.attr("__version__") = kVersion;

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("n", &Circuit::n)
      .def_property_readonly("num_wires", &Circuit::num_wires)
      .def_property_readonly("num_cbits", &Circuit::num_cbits)
      .def("__len__", &Circuit::size)
      .def("count", [](const Circuit& c, const std::string& k) { return count(c, metric(k)); },
           py::arg("metric"))
      .def("depth", [](const Circuit& c, const std::string& k) { return metric_depth(c, metric(k)); },
           py::arg("metric"))
      .def("to_qasm", &to_qasm)
      .def("registers", [](const Circuit& c) {
        py::dict d;
        for (const auto& r : c.registers()) d[py::str(std::string(to_string(r.role)))] = r.size;
        return d;
      });

  m.def("strategies", [] {
    std::vector<std::string> out;
    for (Strategy s : kAllStrategies) out.emplace_back(to_string(s));
    return out;
  });
  m.def("synth_modadd", [](int n, const py::int_& N, const py::int_& a) {
    return synth_modadd(instance(n, N, a));
  }, py::arg("n"), py::arg("N"), py::arg("a"));
  m.def("assign", [](const Circuit& c, const std::string& s, bool unitary) {
    return assign(c, strategy(s), mode(unitary));
  }, py::arg("circuit"), py::arg("strategy"), py::arg("unitary") = false);
  m.def("lower", [](const Circuit& c, const std::string& s, bool unitary) {
    return lower(c, strategy(s), mode(unitary));
  }, py::arg("circuit"), py::arg("strategy"), py::arg("unitary") = false);
  m.def("parse_qasm", [](const std::string& text) { return parse_qasm(text); });

  m.def("simulate", [](const Circuit& c, bool x, const py::int_& b, std::uint64_t seed) {
    const SimState s = run_monomial(c, modadd_input(c, x, to_big(b)), seed);
    py::dict d;
    d["b"] = to_py(get_register(s.bits, c.reg(Role::B)));
    d["phase_exp"] = s.phase_exp;
    bool clean = true;
    for (std::size_t w = 0; w < c.num_wires(); ++w) {
      const Role r = c.wires()[w].role;
      if (r != Role::B && r != Role::Ctrl) clean &= s.bits[w] == 0;
    }
    d["ancillas_clean"] = clean;
    return d;
  }, py::arg("circuit"), py::arg("x"), py::arg("b"), py::arg("seed") = 0);

  m.def("verify", [](int n, const py::int_& N, const py::int_& a, const std::string& s,
                     std::int64_t samples, std::uint64_t seed, bool unitary) {
    const ModAddInstance inst = instance(n, N, a);
    Verdict v;
    {
      py::gil_scoped_release release;
      v = verify_functional(inst, strategy(s), samples > 0 ? VerifyMode::sampled(samples) : VerifyMode::all(),
                            seed, mode(unitary));
    }
    return json_loads(verdict_json(v, {"verify", inst, n, s, seed, samples}));
  }, py::arg("n"), py::arg("N"), py::arg("a"), py::arg("strategy") = "OURS_FTQ",
     py::arg("samples") = 0, py::arg("seed") = 1, py::arg("unitary") = false);

  m.def("report", [](int n, const py::int_& N, const py::int_& a, const std::string& s) {
    const ModAddInstance inst = instance(n, N, a);
    const Strategy st = strategy(s);
    const ResourceReport r = st == Strategy::VanMeterItohRef ? reference_report(n)
                                                             : analyze(synth_modadd(inst), st);
    return json_loads(report_json(r, {"report", inst, n, s, 0, 0}));
  }, py::arg("n"), py::arg("N"), py::arg("a"), py::arg("strategy") = "OURS_FTQ");

  m.def("average_report", [](int n, const std::string& s, std::int64_t samples, std::uint64_t seed) {
    std::vector<AverageReport> v;
    {
      py::gil_scoped_release release;
      v = average_reports(n, {strategy(s)}, samples, seed);
    }
    return json_loads(average_json(v.front(), {"report", std::nullopt, n, s, seed, samples}));
  }, py::arg("n"), py::arg("strategy") = "OURS_FTQ", py::arg("samples") = 20, py::arg("seed") = 1);

  m.def("model_t_depth", &model_t_depth, py::arg("n"), py::arg("n_t"));
  m.def("model_kq_t", &model_kq_t, py::arg("n"), py::arg("n_t"), py::arg("c_g") = 15.0);
  m.def("closed_form_t_width", &closed_form_t_width, py::arg("n"), py::arg("c_g") = 15.0);
  m.def("optimal_t_width", &optimal_t_width, py::arg("n"), py::arg("c_g") = 15.0);
  m.def("schedule_t_width", [](const Circuit& c, std::optional<std::int64_t> n_t) {
    return schedule_t_width(c, n_t.value_or(kUnboundedWidth));
  }, py::arg("circuit"), py::arg("n_t") = py::none());
  m.def("distillation", [] {
    return json_loads(distillation_json(synth_distillation(), {"distill-report", std::nullopt, 0, "", 0, 0}));
  });
}
