#include "helicity/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

#include "helicity/bilinears.hpp"
#include "helicity/clifford.hpp"
#include "helicity/graphene.hpp"
#include "helicity/theorem.hpp"

namespace helicity::cli {

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Clifford: return "clifford";
    case Suite::Bilinears: return "bilinears";
    case Suite::Theorem: return "theorem";
    case Suite::Graphene: return "graphene";
    case Suite::All: return "all";
  }
  return "?";
}

std::string_view to_string(OutputFormat f) { return f == OutputFormat::Json ? "json" : "csv"; }

Suite parse_suite(std::string_view name) {
  for (auto s : {Suite::Clifford, Suite::Bilinears, Suite::Theorem, Suite::Graphene, Suite::All}) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

void RunConfig::validate() const {
  if (grid_theta < 2 || grid_phi < 2) throw std::invalid_argument("grid sizes must be >= 2");
  if (delta_phi_samples < 1) throw std::invalid_argument("delta-phi samples must be >= 1");
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw std::invalid_argument("tolerance must be positive");
  }
}

double CaseRecord::max_residual() const {
  double m = 0.0;
  for (const auto& [name, value] : residuals) m = std::max(m, value);
  return m;
}

std::size_t SuiteReport::passed_count() const {
  return static_cast<std::size_t>(
      std::ranges::count_if(cases, [](const CaseRecord& c) { return c.passed; }));
}

double SuiteReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : cases) m = std::max(m, c.max_residual());
  return m;
}

// ---------------------------------------------------------------------------
// Parsing

ParseError::ParseError(std::string token, std::size_t position, const std::string& why)
    : std::invalid_argument("cannot parse '" + token + "' at position " +
                            std::to_string(position) + ": " + why),
      token_(std::move(token)),
      position_(position) {}

WrongArity::WrongArity(std::size_t count)
    : std::invalid_argument("expected 4 spinor components, got " + std::to_string(count)),
      count_(count) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

double parse_real(std::string_view text, std::string_view token, std::size_t offset) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty() || text.front() == '+') {
    throw ParseError(std::string(token), offset, "missing number");
  }
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(std::string(token), offset, "not a number");
  }
  if (!std::isfinite(value)) throw ParseError(std::string(token), offset, "non-finite value");
  return value;
}

double parse_unit_or_real(std::string_view text, std::string_view token, std::size_t offset) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_real(text, token, offset);
}

}  // namespace

Complex parse_complex(std::string_view token, std::size_t offset) {
  std::string compact;
  std::size_t lead = 0;
  while (lead < token.size() && is_space(token[lead])) ++lead;
  for (char c : token)
    if (!is_space(c)) compact.push_back(c);
  const std::size_t pos = offset + lead;
  const std::string original(token);

  if (compact.empty()) throw ParseError(original, pos, "empty component");
  const char last = compact.back();
  if (last == 'j' || last == 'J') throw ParseError(original, pos, "imaginary unit is 'i'");
  if (last != 'i') return {parse_real(compact, original, pos), 0.0};

  const std::string_view body(compact.data(), compact.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_unit_or_real(body, original, pos)};
  return {parse_real(body.substr(0, split), original, pos),
          parse_unit_or_real(body.substr(split), original, pos)};
}

DiracSpinor parse_spinor(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> tokens;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    tokens.emplace_back(text.substr(start, end - start), start);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (tokens.size() != 4) throw WrongArity(tokens.size());
  DiracSpinor psi;
  for (std::size_t i = 0; i < 4; ++i) psi[i] = parse_complex(tokens[i].first, tokens[i].second);
  return psi;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

std::string num(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

bool within(const NamedValues& values, double tol) {
  return std::ranges::all_of(values, [tol](const auto& kv) { return kv.second <= tol; });
}

double imag_abs(Complex c) { return std::abs(c.imag()); }

void clifford_cases(const RunConfig& cfg, std::vector<CaseRecord>& out) {
  const auto& gs = weyl_gammas();
  const double tol = cfg.tolerance;

  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
      const double eta = a == b ? gs.eta[ua] : 0.0;
      const auto expected = Complex{2.0 * eta} * ComplexMat4::identity();
      CaseRecord c{"clifford", "anticommutator g" + std::to_string(a) + " g" + std::to_string(b)};
      c.inputs = {{"a", a}, {"b", b}};
      c.residuals = {{"anticommutator", max_abs_diff(anticommutator(gs[ua], gs[ub]), expected)}};
      c.passed = within(c.residuals, tol);
      out.push_back(std::move(c));
    }

  const auto one = ComplexMat2::identity();
  const auto zero = ComplexMat2::zero();
  {
    CaseRecord c{"clifford", "gamma5"};
    c.residuals = {
        {"block_form", max_abs_diff(gs.gamma5, from_blocks(-one, zero, zero, one))},
        {"square", max_abs_diff(gs.gamma5 * gs.gamma5, ComplexMat4::identity())},
    };
    for (std::size_t a = 0; a < 4; ++a) {
      c.residuals.emplace_back("anticommutes_g" + std::to_string(a),
                               max_norm(anticommutator(gs.gamma5, gs[a])));
    }
    c.passed = within(c.residuals, tol);
    out.push_back(std::move(c));
  }

  const auto basis = build_basis16(gs);
  {
    CaseRecord c{"clifford", "basis16"};
    const auto counts = basis.grade_counts();
    for (std::size_t g = 0; g < counts.size(); ++g) {
      c.measurements.emplace_back("grade" + std::to_string(g) + "_count", counts[g]);
    }
    std::array<ComplexMat4, 16> mats;
    std::ranges::transform(basis.elements, mats.begin(), &BasisElement::matrix);
    const int rank = numerical_rank(mats, 1e-10);
    c.measurements.emplace_back("rank", rank);
    c.residuals = {{"pseudo_scalar_vs_gamma5",
                    max_abs_diff(basis.pseudo_scalar().matrix, -kI * gs.gamma5)}};
    c.passed = within(c.residuals, tol) && rank == 16 && counts == std::array{1, 4, 6, 4, 1};
    out.push_back(std::move(c));
  }
}

void bilinear_cases(const RunConfig& cfg, std::vector<CaseRecord>& out) {
  const auto& gs = weyl_gammas();
  const double tol = cfg.tolerance;

  for (int i = 0; i < kBilinearSamples; ++i) {
    const std::uint64_t seed = cfg.seed * 1'000'003ULL + static_cast<std::uint64_t>(i);
    const auto psi = random_spinor(seed);
    const auto sp = slash_pair(psi, gs);
    const auto ex = expanded_slash_pair(psi);
    const auto b = bilinear_set(psi, gs);

    double reality = imag_abs(b.omega1);
    double antisym = 0.0;
    for (std::size_t a = 0; a < 4; ++a) {
      reality = std::max({reality, imag_abs(b.J[a]), imag_abs(b.K[a])});
      for (std::size_t c = 0; c < 4; ++c) {
        reality = std::max(reality, imag_abs(b.S[a][c]));
        antisym = std::max(antisym, std::abs(b.S[a][c] + b.S[c][a]));
      }
    }

    CaseRecord c{"bilinears", "random spinor " + std::to_string(i)};
    c.inputs = {{"seed", static_cast<double>(seed)}};
    c.residuals = {
        {"expanded_K", max_abs_diff(sp.K_slash, ex.K_slash)},
        {"expanded_J", max_abs_diff(sp.J_slash, ex.J_slash)},
        {"block_form_K", max_abs_diff(sp.K_slash, block_form_K(psi))},
        {"block_form_J", max_abs_diff(sp.J_slash, block_form_J(psi))},
        {"reality", reality},
        {"omega2_real_part", std::abs(b.omega2.real())},
        {"S_antisymmetry", antisym},
    };
    c.passed = within(c.residuals, tol);
    out.push_back(std::move(c));
  }

  struct Fixed {
    const char* label;
    DiracSpinor psi;
    std::optional<double> expected_h;  // nullopt: must be NotProportional
  };
  const double r = 1.0 / std::sqrt(2.0);
  const std::array<Fixed, 3> fixed{{
      {"right-handed (1,0,0,0)", DiracSpinor{1.0, 0.0, 0.0, 0.0}, 1.0},
      {"left-handed (0,0,0,1)", DiracSpinor{0.0, 0.0, 0.0, 1.0}, -1.0},
      {"mixed (1,0,1,0)/sqrt2", DiracSpinor{r, 0.0, r, 0.0}, std::nullopt},
  }};
  for (const auto& f : fixed) {
    const auto hr = extract_helicity(slash_pair(f.psi, gs), tol);
    CaseRecord c{"bilinears", f.label};
    c.status = to_string(hr.status);
    c.measurements = {{"h", hr.h}, {"helicity_residual", hr.residual}};
    if (f.expected_h) {
      c.residuals = {{"helicity_residual", hr.residual},
                     {"h_error", std::abs(hr.h - *f.expected_h)}};
      c.passed = hr.accepted() && within(c.residuals, tol);
    } else {
      c.passed = hr.status == HelicityStatus::NotProportional && hr.residual > 0.1;
    }
    out.push_back(std::move(c));
  }
}

double grid_theta(int i, int n) { return i == n - 1 ? kPi : kPi * i / (n - 1); }
double grid_phi(int j, int n) { return 2.0 * kPi * j / n; }

void theorem_cases(const RunConfig& cfg, std::vector<CaseRecord>& out) {
  const double tol = cfg.tolerance;
  out.reserve(out.size() + static_cast<std::size_t>(cfg.grid_theta) * cfg.grid_phi *
                               cfg.delta_phi_samples * 2);
  for (int i = 0; i < cfg.grid_theta; ++i)
    for (int j = 0; j < cfg.grid_phi; ++j)
      for (int k = 0; k < cfg.delta_phi_samples; ++k)
        for (auto hand : {Handedness::Right, Handedness::Left}) {
          const UnitMomentum p{grid_theta(i, cfg.grid_theta), grid_phi(j, cfg.grid_phi)};
          const PhaseOffset off{grid_phi(k, cfg.delta_phi_samples)};
          const auto rep = verify_main_result(p, off, hand, tol);
          const auto proj = projector_identities(p, off);
          const auto pr = projector(phi_R(p));
          const auto prc = projector(charge_conj2(phi_R(p)));

          CaseRecord c{"theorem", std::string(to_string(hand)) + " " + std::to_string(i) + "/" +
                                      std::to_string(j) + "/" + std::to_string(k)};
          c.inputs = {{"theta", p.theta}, {"phi", p.phi}, {"delta_phi", off.delta_phi}};
          c.status = to_string(rep.extracted_h.status);
          c.measurements = {{"h", rep.extracted_h.h}};
          c.residuals = {
              {"helicity_residual", rep.extracted_h.residual},
              {"h_error", std::abs(rep.extracted_h.h - (hand == Handedness::Right ? 1.0 : -1.0))},
              {"f1", rep.eigen_residuals[0]},
              {"f2", rep.eigen_residuals[1]},
              {"f3", rep.eigen_residuals[2]},
              {"f4", rep.eigen_residuals[3]},
              {"K_block_projector_plus", rep.projector_residuals[0]},
              {"K_block_projector_minus", rep.projector_residuals[1]},
              {"P_R", proj[0]},
              {"P_Rc", proj[1]},
              {"P_Lc", proj[2]},
              {"P_L", proj[3]},
              {"completeness", max_abs_diff(pr + prc, ComplexMat2::identity())},
          };
          c.passed = rep.passed && within(c.residuals, tol);
          out.push_back(std::move(c));
        }
}

void graphene_cases(const RunConfig& cfg, std::vector<CaseRecord>& out) {
  const double tol = cfg.tolerance;
  const GrapheneParams params{};
  std::mt19937_64 engine(cfg.seed ^ 0x6a09e667f3bcc909ULL);
  auto draw = [&engine] { return static_cast<double>(engine() >> 11) * 0x1p-52 - 1.0; };

  for (int i = 0; i < kGrapheneSamples; ++i) {
    PlanarWavevector k{5.0 * draw(), 5.0 * draw()};
    while (k.magnitude() < 1e-3) k = {5.0 * draw(), 5.0 * draw()};
    const double mag = k.magnitude();
    const auto h = hamiltonian(k, params);
    // Eigenvalues of a 2x2 Hermitian matrix, (tr +- sqrt((a-d)^2 + 4|b|^2)) / 2.
    const double tr = h.trace().real();
    const double disc = std::sqrt(std::pow((h(0, 0) - h(1, 1)).real(), 2) + 4.0 * std::norm(h(0, 1)));
    const double lam_plus = (tr + disc) / 2.0, lam_minus = (tr - disc) / 2.0;
    const double cone = params.scale() * mag;

    for (int s = 0; s < cfg.delta_phi_samples; ++s) {
      const PhaseOffset off{grid_phi(s, cfg.delta_phi_samples)};
      const auto rec = reconstruct(k, off, params);
      const auto p = planar_to_unit_momentum(k);
      const auto& gs = weyl_gammas();
      const auto ptr = block_partial_trace(gs.gamma5 * restricted_K(p, off) * gs.gamma[0]);
      const auto khat = (1.0 / mag) * (Complex{k.kx} * pauli(1) + Complex{k.ky} * pauli(2));

      CaseRecord c{"graphene", "k " + std::to_string(i) + "/" + std::to_string(s)};
      c.inputs = {{"kx", k.kx}, {"ky", k.ky}, {"delta_phi", off.delta_phi}};
      c.measurements = {{"prefactor_ratio", rec.prefactor_ratio},
                        {"k_squared", mag * mag},
                        {"right_restriction_sign", rec.right_restriction_sign},
                        {"right_restriction_residual", rec.right_restriction_residual}};
      c.residuals = {
          {"reconstruction", rec.residual},
          {"block_trace_vs_2_sigma_k", max_abs_diff(ptr, Complex{2.0} * khat)},
          {"hamiltonian_vs_helicity", max_abs_diff(h, Complex{cone} * khat)},
          {"eigenvalue_plus", std::abs(lam_plus - cone)},
          {"eigenvalue_minus", std::abs(lam_minus + cone)},
          {"prefactor_ratio_rel", std::abs(rec.prefactor_ratio - mag * mag) / (mag * mag)},
      };
      c.passed = within(c.residuals, tol);
      out.push_back(std::move(c));
    }
  }
}

}  // namespace

SuiteReport run_suite(const RunConfig& cfg) {
  cfg.validate();
  SuiteReport report{std::string(to_string(cfg.suite)), cfg, {}};
  const bool all = cfg.suite == Suite::All;
  if (all || cfg.suite == Suite::Clifford) clifford_cases(cfg, report.cases);
  if (all || cfg.suite == Suite::Bilinears) bilinear_cases(cfg, report.cases);
  if (all || cfg.suite == Suite::Theorem) theorem_cases(cfg, report.cases);
  if (all || cfg.suite == Suite::Graphene) graphene_cases(cfg, report.cases);
  return report;
}

SuiteReport compute_command(std::string_view spinor_text, const RunConfig& cfg) {
  const auto psi = parse_spinor(spinor_text);
  const auto& gs = weyl_gammas();
  const auto b = bilinear_set(psi, gs);
  const auto sp = slash_pair(psi, gs);
  const auto hr = extract_helicity(sp, cfg.tolerance);

  CaseRecord c{"compute", std::string(spinor_text)};
  const char* names = "abcd";
  for (std::size_t i = 0; i < 4; ++i) {
    c.inputs.emplace_back(std::string(1, names[i]) + ".re", psi[i].real());
    c.inputs.emplace_back(std::string(1, names[i]) + ".im", psi[i].imag());
  }
  auto add = [&c](const std::string& name, Complex v) {
    c.measurements.emplace_back(name + ".re", v.real());
    c.measurements.emplace_back(name + ".im", v.imag());
  };
  add("omega1", b.omega1);
  for (std::size_t a = 0; a < 4; ++a) add("J" + std::to_string(a), b.J[a]);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t d = a + 1; d < 4; ++d) add("S" + std::to_string(a) + std::to_string(d), b.S[a][d]);
  for (std::size_t a = 0; a < 4; ++a) add("K" + std::to_string(a), b.K[a]);
  add("omega2", b.omega2);
  const auto kb = BlockMat4View::of(sp.K_slash);
  const auto jb = BlockMat4View::of(sp.J_slash);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const auto ij = std::to_string(i) + std::to_string(j);
      add("K_tr" + ij, kb.tr(i, j));
      add("K_bl" + ij, kb.bl(i, j));
      add("J_tr" + ij, jb.tr(i, j));
      add("J_bl" + ij, jb.bl(i, j));
    }
  c.measurements.emplace_back("h", hr.h);
  c.measurements.emplace_back("helicity_residual", hr.residual);
  c.status = to_string(hr.status);
  if (hr.accepted()) c.residuals = {{"helicity_residual", hr.residual}};
  c.passed = hr.accepted();

  return SuiteReport{"compute", cfg, {std::move(c)}};
}

// ---------------------------------------------------------------------------
// Output

namespace {

nlohmann::ordered_json named(const NamedValues& values) {
  auto obj = nlohmann::ordered_json::object();
  for (const auto& [name, value] : values) obj[name] = value;
  return obj;
}

nlohmann::ordered_json config_json(const SuiteReport& report) {
  const auto& cfg = report.config;
  nlohmann::ordered_json j;
  if (report.suite != "compute") {
    j["suite"] = to_string(cfg.suite);
    j["grid_theta"] = cfg.grid_theta;
    j["grid_phi"] = cfg.grid_phi;
    j["delta_phi_samples"] = cfg.delta_phi_samples;
    j["seed"] = cfg.seed;
  }
  j["tolerance"] = cfg.tolerance;
  return j;
}

}  // namespace

nlohmann::ordered_json to_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["version"] = kVersion;
  j["config"] = config_json(report);
  j["summary"] = {{"cases", report.cases.size()},
                  {"passed", report.passed_count()},
                  {"max_residual", report.max_residual()}};
  auto cases = nlohmann::ordered_json::array();
  for (const auto& c : report.cases) {
    nlohmann::ordered_json cj;
    cj["suite"] = c.suite;
    cj["label"] = c.label;
    cj["inputs"] = named(c.inputs);
    cj["residuals"] = named(c.residuals);
    cj["measurements"] = named(c.measurements);
    if (c.status) cj["status"] = *c.status;
    cj["passed"] = c.passed;
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  return j;
}

std::string to_csv(const SuiteReport& report) {
  std::ostringstream os;
  os << "suite,case,label,group,key,value\n";
  os << report.suite << ",,,summary,cases," << report.cases.size() << "\n";
  os << report.suite << ",,,summary,passed," << report.passed_count() << "\n";
  os << report.suite << ",,,summary,max_residual," << num(report.max_residual()) << "\n";
  for (std::size_t i = 0; i < report.cases.size(); ++i) {
    const auto& c = report.cases[i];
    auto rows = [&](std::string_view group, const NamedValues& values) {
      for (const auto& [name, value] : values) {
        os << c.suite << ',' << i << ',' << c.label << ',' << group << ',' << name << ','
           << num(value) << '\n';
      }
    };
    rows("inputs", c.inputs);
    rows("residuals", c.residuals);
    rows("measurements", c.measurements);
    os << c.suite << ',' << i << ',' << c.label << ",passed,passed," << (c.passed ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string render(const SuiteReport& report, OutputFormat format) {
  if (format == OutputFormat::Csv) return to_csv(report);
  return to_json(report).dump(2) + "\n";
}

std::string render_compute_text(const SuiteReport& report) {
  std::ostringstream os;
  os.precision(12);
  for (const auto& c : report.cases) {
    os << "spinor: " << c.label << "\n";
    const auto value = [&c](const std::string& key) {
      for (const auto& [name, v] : c.measurements)
        if (name == key) return v;
      return 0.0;
    };
    const auto cplx = [&](const std::string& key) {
      return Complex{value(key + ".re"), value(key + ".im")};
    };
    os << "  Omega1 = " << cplx("omega1") << "\n";
    os << "  J^a    =";
    for (int a = 0; a < 4; ++a) os << ' ' << cplx("J" + std::to_string(a));
    os << "\n  K_a    =";
    for (int a = 0; a < 4; ++a) os << ' ' << cplx("K" + std::to_string(a));
    os << "\n  S^ab   =";
    for (int a = 0; a < 4; ++a)
      for (int d = a + 1; d < 4; ++d)
        os << " [" << a << d << "]" << cplx("S" + std::to_string(a) + std::to_string(d));
    os << "\n  Omega2 = " << cplx("omega2") << "\n";
    for (const char* block : {"K_tr", "K_bl", "J_tr", "J_bl"}) {
      os << "  " << block << " = [[" << cplx(std::string(block) + "00") << ", "
         << cplx(std::string(block) + "01") << "], [" << cplx(std::string(block) + "10") << ", "
         << cplx(std::string(block) + "11") << "]]\n";
    }
    os << "  helicity: " << c.status.value_or("?") << ", h = " << value("h")
       << ", residual = " << value("helicity_residual") << "\n";
  }
  return os.str();
}

}  // namespace helicity::cli
