// Acceptance criteria: one PASS/FAIL line per criterion; exit status is
// nonzero when any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "helicity/cli.hpp"
#include "helicity/clifford.hpp"

using namespace helicity;
using namespace helicity::cli;

namespace {

int failures = 0;
std::map<int, std::string> lines;

void report(int n, bool ok, const std::string& what) {
  lines[n] = std::string(ok ? "[PASS]" : "[FAIL]") + " criterion " + std::to_string(n) + ": " + what;
  if (!ok) ++failures;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

/// Largest value of residual `key` over the cases whose label starts with `prefix`.
double max_residual(const SuiteReport& r, const std::string& key, const std::string& prefix = "") {
  double m = 0.0;
  for (const auto& c : r.cases) {
    if (!c.label.starts_with(prefix)) continue;
    for (const auto& [k, v] : c.residuals)
      if (k == key) m = std::max(m, v);
  }
  return m;
}

double measurement(const CaseRecord& c, const std::string& key) {
  for (const auto& [k, v] : c.measurements)
    if (k == key) return v;
  return std::nan("");
}

const CaseRecord* find_case(const SuiteReport& r, const std::string& label) {
  for (const auto& c : r.cases)
    if (c.label == label) return &c;
  return nullptr;
}

RunConfig config(Suite s) {
  RunConfig cfg;
  cfg.suite = s;
  return cfg;
}

int run(const std::string& args, const std::filesystem::path& out) {
  const std::string cmd = std::string("\"") + HELICITY_CLI_PATH + "\" " + args + " > \"" +
                          out.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void gamma_algebra() {
  const auto r = run_suite(config(Suite::Clifford));
  double anti = 0.0;
  for (const auto& c : r.cases)
    if (c.label.starts_with("anticommutator")) anti = std::max(anti, c.max_residual());
  const auto* basis = find_case(r, "basis16");
  const double rank = basis ? measurement(*basis, "rank") : 0.0;
  const double g5 = max_residual(r, "block_form", "gamma5");
  report(1, anti == 0.0 && g5 == 0.0 && rank == 16.0 && r.all_passed(),
         "anticommutator max defect " + fmt(anti) + ", gamma5 block defect " + fmt(g5) +
             ", basis rank " + std::to_string(static_cast<int>(rank)));
}

void bilinears(const SuiteReport& r) {
  const double ek = max_residual(r, "expanded_K", "random");
  const double ej = max_residual(r, "expanded_J", "random");
  report(2, std::max(ek, ej) <= 1e-12,
         "expanded slash entries vs definitions over " + std::to_string(kBilinearSamples) +
             " spinors: K " + fmt(ek) + ", J " + fmt(ej));

  const double bk = max_residual(r, "block_form_K", "random");
  const double bj = max_residual(r, "block_form_J", "random");
  report(3, std::max(bk, bj) <= 1e-12, "block forms vs slash: K " + fmt(bk) + ", J " + fmt(bj));

  const auto* mixed = find_case(r, "mixed (1,0,1,0)/sqrt2");
  const bool ok = mixed && mixed->status == "NotProportional" &&
                  measurement(*mixed, "helicity_residual") > 0.1;
  report(8, ok,
         "mixed state status " + (mixed ? mixed->status.value_or("?") : std::string("missing")) +
             ", residual " + (mixed ? fmt(measurement(*mixed, "helicity_residual")) : "n/a"));
}

void theorem(const SuiteReport& r) {
  double f = 0.0;
  for (const char* k : {"f1", "f2", "f3", "f4"}) f = std::max(f, max_residual(r, k));
  const double hres = max_residual(r, "helicity_residual");
  const double herr = max_residual(r, "h_error");
  bool accepted = true;
  for (const auto& c : r.cases) accepted = accepted && c.status == "Accepted";
  report(4, accepted && hres <= 1e-10 && herr <= 1e-10 && f <= 1e-12,
         std::to_string(r.cases.size()) + " cases, helicity residual " + fmt(hres) + ", |h -+ 1| " +
             fmt(herr) + ", eigen-equations (incl. conjugates) " + fmt(f));

  double p = 0.0;
  for (const char* k : {"P_R", "P_Rc", "P_Lc", "P_L", "K_block_projector_plus", "K_block_projector_minus"})
    p = std::max(p, max_residual(r, k));
  const double comp = max_residual(r, "completeness");
  report(5, p <= 1e-12 && comp <= 1e-12,
         "projector identities " + fmt(p) + ", completeness " + fmt(comp));
}

void conjugation() {
  double orth = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto phi = random_two_spinor(static_cast<std::uint64_t>(i) + 1);
    orth = std::max(orth, std::abs(inner(phi, charge_conj2(phi))));
  }
  double square = 0.0;
  double block = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto phi = random_two_spinor(static_cast<std::uint64_t>(i) + 5000);
    square = std::max(square, max_abs_diff(charge_conj2(charge_conj2(phi)), -1.0 * phi));
    const auto psi = random_spinor(static_cast<std::uint64_t>(i) + 9000);
    const auto [r, l] = split(psi);
    block = std::max(block, max_abs_diff(charge_conj4(psi, weyl_gammas()), assemble(charge_conj2(l), -1.0 * charge_conj2(r))));
  }
  report(6, orth <= 1e-14 && square <= 1e-14 && block <= 1e-14,
         "<phi|phi^C> " + fmt(orth) + ", C^2 + 1 " + fmt(square) + ", 4-spinor block form " + fmt(block));
}

void graphene() {
  const auto r = run_suite(config(Suite::Graphene));
  const double rec = max_residual(r, "reconstruction");
  const double ev = std::max(max_residual(r, "eigenvalue_plus"), max_residual(r, "eigenvalue_minus"));
  const double ratio = max_residual(r, "prefactor_ratio_rel");
  report(7, rec <= 1e-12 && ev <= 1e-12 && ratio <= 1e-12 && r.all_passed(),
         std::to_string(r.cases.size()) + " cases, reconstruction " + fmt(rec) + ", eigenvalues " +
             fmt(ev) + ", prefactor ratio vs |k|^2 (relative) " + fmt(ratio));
}

void cli_contract() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("helicity_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string verify = "verify all --grid-theta 8 --grid-phi 8 --delta-phi-samples 2 --seed 3";
  const int rc1 = run(verify, dir / "a.json");
  const int rc2 = run(verify, dir / "b.json");
  const std::string a = slurp(dir / "a.json");
  const bool identical = !a.empty() && a == slurp(dir / "b.json");

  const int right = run("compute --spinor \"1,0,0,0\"", dir / "c.txt");
  const int mixed = run("compute --spinor \"1,0,1,0\"", dir / "d.txt");
  const int arity = run("compute --spinor \"1,0,0\"", dir / "e.txt");
  const int bad_suite = run("verify nothing", dir / "f.txt");
  const int bad_tol = run("verify clifford --tolerance -1", dir / "g.txt");
  const int strict = run("verify theorem --grid-theta 4 --grid-phi 4 --delta-phi-samples 1 --tolerance 1e-30",
                         dir / "h.json");
  fs::remove_all(dir);

  const bool codes = rc1 == 0 && rc2 == 0 && right == 0 && mixed == 1 && arity == 2 &&
                     bad_suite == 2 && bad_tol == 2 && strict == 1;
  std::ostringstream what;
  what << "byte-identical JSON " << (identical ? "yes" : "no") << " (" << a.size()
       << " bytes); exit codes verify " << rc1 << "/" << rc2 << ", compute right " << right
       << ", mixed " << mixed << ", bad arity " << arity << ", unknown suite " << bad_suite
       << ", bad tolerance " << bad_tol << ", unattainable tolerance " << strict;
  report(9, identical && codes, what.str());
}

}  // namespace

int main() {
  gamma_algebra();
  const auto b = run_suite(config(Suite::Bilinears));
  bilinears(b);
  theorem(run_suite(config(Suite::Theorem)));
  conjugation();
  graphene();
  cli_contract();
  for (const auto& [n, line] : lines) std::cout << line << "\n";
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
