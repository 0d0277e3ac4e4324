// qcla: synthesize, verify and cost control modular adders.
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qcla/modadd.hpp"
#include "qcla/qasm.hpp"
#include "qcla/report.hpp"
#include "qcla/resource.hpp"
#include "qcla/sim.hpp"
#include "qcla/strategy.hpp"

namespace {

using namespace qcla;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InstanceArgs {
  int n = 0;
  std::string N;
  std::string a;
};

void add_instance(CLI::App* cmd, InstanceArgs& ia) {
  cmd->add_option("-n,--n", ia.n, "register width")->required()->check(CLI::Range(1, 1 << 16));
  cmd->add_option("-N,--modulus", ia.N, "modulus N (random when omitted)");
  cmd->add_option("-a,--addend", ia.a, "classical addend a (random when omitted)");
}

// An explicit N and a, or a random instance drawn from the seed.
ModAddInstance make_instance(const InstanceArgs& ia, std::uint64_t seed) {
  if (ia.N.empty() != ia.a.empty()) throw UsageError("give both --modulus and --addend, or neither");
  ModAddInstance inst;
  if (ia.N.empty()) {
    if (ia.n == 1) return ModAddInstance{1, 1, 0};
    std::mt19937_64 rng(seed);
    inst = random_instance(ia.n, rng);
  } else {
    inst.n = ia.n;
    inst.N = parse_biguint(ia.N);
    inst.a = parse_biguint(ia.a);
  }
  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return inst;
}

Strategy strategy_from(const std::string& s) {
  const auto st = parse_strategy(s);
  if (!st) throw UsageError("unknown strategy '" + s + "'");
  return *st;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string text_report(const ResourceReport& r) {
  std::ostringstream os;
  os << "strategy " << r.strategy << (r.model ? " (model)" : "") << ", n=" << r.n << "\n"
     << "  toffoli " << r.toffoli_count << "  t " << r.t_count << "  cnot " << r.cnot_count
     << "  qubits " << r.qubit_count << "\n"
     << "  toffoli-depth " << r.toffoli_depth << "  t-depth " << r.t_depth << "  cnot-depth "
     << r.cnot_depth << "\n"
     << "  kq_t " << r.kq_t << "  kq_cx " << r.kq_cx << "\n";
  for (const RoundRow& row : r.per_round)
    os << "  " << row.label << " " << row.gate << " tof=" << row.toffolis
       << " t=" << row.t_count << " cx=" << row.cnot_count << "\n";
  return os.str();
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("QCLA_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw UsageError("QCLA_SEED is not an unsigned integer");
    }
  }
  return 1;
}

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("qcla");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* lvl = std::getenv("QCLA_LOG_LEVEL"))
    spdlog::set_level(spdlog::level::from_str(lvl));
}

int run(int argc, char** argv) {
  CLI::App app{"Control modular adders on a carry-lookahead adder"};
  app.require_subcommand(1);
  std::uint64_t seed = default_seed();
  app.add_option("--seed", seed, "RNG seed (env QCLA_SEED)");
  std::string out_path;
  app.add_option("-o,--out", out_path, "output file (default stdout)");

  InstanceArgs ia;
  std::string strategy_name = "OURS_FTQ";
  std::string format = "json";

  // synth
  auto* synth = app.add_subcommand("synth", "emit a circuit as QASM");
  add_instance(synth, ia);
  std::string level = "block";
  std::string strategy_synth;
  bool unitary = false;
  synth->add_option("--level", level, "block, assigned or primitive")
      ->check(CLI::IsMember({"block", "assigned", "primitive"}));
  synth->add_option("-s,--strategy", strategy_synth, "decomposition strategy for lower levels");
  synth->add_flag("--unitary", unitary, "uncompute IGRT without measurement");

  // report
  auto* report = app.add_subcommand("report", "resource counts and per-round breakdown");
  add_instance(report, ia);
  std::int64_t report_samples = 0;
  report->add_option("-s,--strategy", strategy_name, "strategy");
  report->add_option("--samples", report_samples, "average over random instances")
      ->check(CLI::PositiveNumber);
  report->add_option("-f,--format", format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  // verify
  auto* verify = app.add_subcommand("verify", "check |x>|b> -> |x>|b+xa mod N>");
  add_instance(verify, ia);
  std::int64_t verify_samples = 0;
  std::int64_t mutate = -1;
  bool verify_unitary = false;
  verify->add_option("-s,--strategy", strategy_name, "strategy");
  verify->add_option("--samples", verify_samples, "sampled cases (default exhaustive)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--mutate", mutate, "delete the k-th CNOT or Toffoli before verifying")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--unitary", verify_unitary, "uncompute IGRT without measurement");

  // sweep-kqt
  auto* sweep = app.add_subcommand("sweep-kqt", "KQ_T versus T-width, CSV");
  std::vector<int> sweep_ns;
  std::int64_t nt_min = 1, nt_max = 0;
  double c_g = 15;
  bool scheduled = false;
  sweep->add_option("--n", sweep_ns, "register widths")->required()->delimiter(',');
  sweep->add_option("--nt-min", nt_min, "smallest T-width")->check(CLI::PositiveNumber);
  sweep->add_option("--nt-max", nt_max, "largest T-width (default 4n)");
  sweep->add_option("--c-g", c_g, "qubits per magic-state factory")->check(CLI::PositiveNumber);
  sweep->add_flag("--scheduled", scheduled, "also schedule a synthesized OURS_FTQ circuit");

  // distill-report
  auto* distill = app.add_subcommand("distill-report", "15-to-1 distillation gadget");
  distill->add_option("-f,--format", format, "json or qasm")
      ->check(CLI::IsMember({"json", "qasm"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  setup_logging();
  spdlog::debug("seed {}", seed);

  if (synth->parsed()) {
    const ModAddInstance inst = make_instance(ia, seed);
    Circuit c = synth_modadd(inst);
    if (level != "block") {
      const Strategy s = strategy_from(strategy_synth.empty() ? "OURS_FTQ" : strategy_synth);
      if (s == Strategy::VanMeterItohRef) throw UsageError("VANMETER_ITOH_REF has no circuit");
      const UncomputeMode mode = unitary ? UncomputeMode::Unitary : UncomputeMode::Measurement;
      c = level == "assigned" ? assign(c, s, mode) : lower(c, s, mode);
    }
    spdlog::info("synthesized {} blocks on {} wires", c.size(), c.num_wires());
    write_out(out_path, to_qasm(c));
    return kExitOk;
  }

  if (report->parsed()) {
    const Strategy s = strategy_from(strategy_name);
    RunHeader h{"report", std::nullopt, ia.n, std::string(to_string(s)), seed, report_samples};
    if (report_samples > 0) {
      if (!ia.N.empty()) throw UsageError("--samples draws random instances; drop -N/-a");
      if (format != "json") throw UsageError("averaged reports are JSON only");
      if (ia.n < 2) throw UsageError("averaged reports need n >= 2");
      const auto avg = average_reports(ia.n, {s}, report_samples, seed);
      write_out(out_path, average_json(avg.front(), h));
      return kExitOk;
    }
    const ModAddInstance inst = make_instance(ia, seed);
    h.instance = inst;
    const ResourceReport r =
        s == Strategy::VanMeterItohRef ? reference_report(inst.n) : analyze(synth_modadd(inst), s);
    write_out(out_path, format == "json"  ? report_json(r, h)
                        : format == "csv" ? report_csv(r)
                                          : text_report(r));
    return kExitOk;
  }

  if (verify->parsed()) {
    const Strategy s = strategy_from(strategy_name);
    if (s == Strategy::VanMeterItohRef) throw UsageError("VANMETER_ITOH_REF has no circuit");
    const ModAddInstance inst = make_instance(ia, seed);
    const UncomputeMode mode = verify_unitary ? UncomputeMode::Unitary : UncomputeMode::Measurement;
    Circuit c = assign(synth_modadd(inst), s, mode);
    if (mutate >= 0) {
      std::int64_t seen = 0;
      std::size_t victim = c.size();
      for (std::size_t i = 0; i < c.size() && victim == c.size(); ++i)
        if ((c[i].kind == GateKind::CNOT || c[i].kind == GateKind::Toffoli) && seen++ == mutate)
          victim = i;
      if (victim == c.size())
        throw UsageError("--mutate beyond the " + std::to_string(seen) + " CNOT/Toffoli blocks");
      spdlog::info("deleting block {} ({})", victim, to_string(c[victim].kind));
      c.erase_block(victim);
    }
    if (verify_samples == 0 && inst.N > (BigUInt(1) << 20))
      throw UsageError("exhaustive verification needs N <= 2^20; pass --samples");
    const Verdict v = verify_circuit(
        c, inst, verify_samples > 0 ? VerifyMode::sampled(verify_samples) : VerifyMode::all(), seed);
    RunHeader h{"verify", inst, inst.n, std::string(to_string(s)), seed, verify_samples};
    write_out(out_path, verdict_json(v, h));
    return v.passed ? kExitOk : kExitFailed;
  }

  if (sweep->parsed()) {
    std::ostringstream os;
    os << "n,n_t,model_t_depth,scheduled_t_depth,kq_t,optimum\n";
    std::mt19937_64 rng(seed);
    for (int n : sweep_ns) {
      if (n < 1) throw UsageError("--n entries must be >= 1");
      const std::int64_t hi = nt_max > 0 ? nt_max : 4LL * n;
      const std::int64_t opt = optimal_t_width(n, c_g);
      Circuit prim;
      if (scheduled && n >= 2) prim = lower(synth_modadd(random_instance(n, rng)), Strategy::OursFTQ);
      for (std::int64_t k = nt_min; k <= hi; ++k) {
        os << n << "," << k << "," << model_t_depth(n, double(k)) << ",";
        if (!prim.empty()) os << schedule_t_width(prim, k);
        os << "," << model_kq_t(n, double(k), c_g) << "," << (k == opt ? 1 : 0) << "\n";
      }
    }
    write_out(out_path, os.str());
    return kExitOk;
  }

  if (distill->parsed()) {
    const Distillation d = synth_distillation();
    if (format == "qasm") {
      write_out(out_path, to_qasm(d.circuit));
    } else {
      RunHeader h{"distill-report", std::nullopt, 0, "", seed, 0};
      write_out(out_path, distillation_json(d, h));
    }
    return kExitOk;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "qcla: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qcla: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qcla: internal error: " << e.what() << "\n";
    return kExitFailed;
  }
}
