// Command-line front end: state amplitudes as JSON, entropy curves as CSV,
// preparation circuits as OpenQASM 3, and the self-check suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
// limit, 4 unsupported feature.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "qdicke/circuits.hpp"
#include "qdicke/common.hpp"
#include "qdicke/entanglement.hpp"
#include "qdicke/qcomb.hpp"
#include "qdicke/states.hpp"
#include "qdicke/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitUnsupported = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

qdicke::Composition parse_composition(const std::string& text, int d, int n) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw UsageError("malformed content list: " + text);
    parts.push_back(v);
  }
  qdicke::Composition k(parts);
  if (k.d() != d)
    throw UsageError("content list has " + std::to_string(k.d()) +
                     " entries but d=" + std::to_string(d));
  if (k.n() != n)
    throw UsageError("content list sums to " + std::to_string(k.n()) +
                     " but n=" + std::to_string(n));
  return k;
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file: " + path);
  out << text;
}

struct StateArgs {
  int d = 0;
  int n = 0;
  std::string k;
  double q = 1.0;
  double alpha = 0.0;
  std::string output = "-";
  bool exact = false;
};

int cmd_state(const StateArgs& a) {
  qdicke::Composition k = parse_composition(a.k, a.d, a.n);
  if (a.exact && a.alpha != 0.0)
    throw UsageError("--exact requires alpha = 0 (integer powers only)");
  qdicke::DeformationParam Q(a.q, a.alpha);
  std::string text = qdicke::state_json(qdicke::dicke_sum(k, Q), k, Q);
  if (a.exact) {
    nlohmann::json doc = nlohmann::json::parse(text);
    doc["normalization_poly"] = qdicke::q_multinomial_poly(k).str();
    text = doc.dump(2) + "\n";
  }
  write_output(a.output, text);
  return kExitOk;
}

struct EntropyArgs {
  int d = 0;
  int n = 0;
  std::string k;
  double q = 1.0;
  std::string output;  // empty: canonical file name in the working directory
  std::string base = "d";
};

int cmd_entropy(const EntropyArgs& a) {
  qdicke::Composition k = parse_composition(a.k, a.d, a.n);
  qdicke::EntropyCurve curve = qdicke::entropy_curve(k, a.q);
  if (a.base != "d") {
    const double factor = a.base == "2" ? std::log(static_cast<double>(a.d)) / std::log(2.0)
                                        : std::log(static_cast<double>(a.d));
    for (auto& [l, s] : curve.rows) s *= factor;
  }
  const std::string path = a.output.empty() ? qdicke::entropy_csv_filename(curve) : a.output;
  write_output(path, qdicke::entropy_csv(curve));
  return kExitOk;
}

struct CircuitArgs {
  int d = 2;
  int n = 0;
  int l = 0;
  double q = 1.0;
  double alpha = 0.0;
  bool full = false;
  bool init = false;
  bool verify = false;
  std::string output = "-";
  std::string report = "-";
};

int cmd_circuit(const CircuitArgs& a) {
  if (a.d != 2)
    throw qdicke::UnsupportedError(
        "circuit synthesis covers two-level systems only; d=" + std::to_string(a.d) +
        " has no known gate decomposition here");
  qdicke::DeformationParam Q(a.q, a.alpha);
  qdicke::Circuit c =
      a.full ? qdicke::build_U(a.n, Q) : qdicke::build_pruned_U(a.n, a.l, Q);
  if (a.init) {
    std::vector<qdicke::Gate> prefix;
    for (int b = 0; b < a.l; ++b)
      prefix.push_back(qdicke::Gate{qdicke::GateKind::x, {}, b, {}});
    c.gates.insert(c.gates.begin(), prefix.begin(), prefix.end());
  }
  write_output(a.output, qdicke::export_qasm(c));
  if (a.verify) {
    qdicke::FidelityReport rep = qdicke::prepare_and_verify(a.n, a.l, Q);
    write_output(a.report, qdicke::report_json(rep));
  }
  return kExitOk;
}

struct VerifyArgs {
  qdicke::VerifyOptions opts;
  std::string inject_fault;
};

int cmd_verify(const VerifyArgs& a) {
  qdicke::VerifyOptions opts = a.opts;
  if (!a.inject_fault.empty()) {
    if (a.inject_fault != "lambda-sign")
      throw UsageError("unknown fault name: " + a.inject_fault);
    opts.flip_lambda_sign = true;
  }
  auto results = qdicke::run_verification(opts);
  std::fputs(qdicke::format_report(results).c_str(), stdout);
  return qdicke::all_pass(results) ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformed qudit Dicke states: exact amplitudes, entanglement entropy curves, and preparation circuits"};
  app.require_subcommand(1);

  StateArgs sa;
  CLI::App* state = app.add_subcommand("state", "Write state amplitudes as JSON");
  state->add_option("-d", sa.d, "number of levels")->required();
  state->add_option("-n", sa.n, "number of sites")->required();
  state->add_option("-k", sa.k, "comma-separated content, e.g. 1,2,1")->required();
  state->add_option("-q", sa.q, "deformation magnitude")->check(CLI::PositiveNumber);
  state->add_option("--alpha", sa.alpha, "deformation phase in radians");
  state->add_option("-o,--output", sa.output, "output path, - for stdout");
  state->add_flag("--exact", sa.exact,
                  "include the exact normalization polynomial (alpha = 0 only)");

  EntropyArgs ea;
  CLI::App* entropy = app.add_subcommand("entropy", "Write the entropy curve as CSV");
  entropy->add_option("-d", ea.d, "number of levels")->required();
  entropy->add_option("-n", ea.n, "number of sites")->required();
  entropy->add_option("-k", ea.k, "comma-separated content")->required();
  entropy->add_option("-q", ea.q, "deformation magnitude")->check(CLI::PositiveNumber);
  entropy->add_option("-o,--output", ea.output,
                      "output path, - for stdout (default: canonical file name)");
  entropy->add_option("--base", ea.base, "entropy base: d, 2, or e")
      ->check(CLI::IsMember({"d", "2", "e"}));

  CircuitArgs ca;
  CLI::App* circuit = app.add_subcommand("circuit", "Write a preparation circuit as OpenQASM 3");
  circuit->add_option("-n", ca.n, "number of qubits")->required();
  circuit->add_option("-l", ca.l, "number of excitations")->required();
  circuit->add_option("-d", ca.d, "number of levels (must be 2)");
  circuit->add_option("-q", ca.q, "deformation magnitude")->check(CLI::PositiveNumber);
  circuit->add_option("--alpha", ca.alpha, "deformation phase in radians");
  circuit->add_flag("--full", ca.full, "emit the input-independent circuit");
  circuit->add_flag("--init", ca.init, "prepend X gates preparing the sorted input word");
  circuit->add_flag("--verify", ca.verify, "simulate and report fidelities as JSON");
  circuit->add_option("-o,--output", ca.output, "QASM output path, - for stdout");
  circuit->add_option("--report", ca.report, "fidelity report path, - for stdout");

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "Run the self-check suites");
  verify->add_option("--max-n", va.opts.max_n, "largest system size");
  verify->add_option("--max-d", va.opts.max_d, "largest level count");
  verify->add_option("--seed", va.opts.seed, "seed for sampled subsets");
  verify->add_option("--sample", va.opts.sample, "cap on cases per suite, 0 = all");
  verify->add_option("--inject-fault", va.inject_fault, "")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (state->parsed()) return cmd_state(sa);
    if (entropy->parsed()) return cmd_entropy(ea);
    if (circuit->parsed()) return cmd_circuit(ca);
    if (verify->parsed()) return cmd_verify(va);
  } catch (const qdicke::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const qdicke::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
