#include "helicity/theorem.hpp"

#include <algorithm>
#include <cmath>

#include "helicity/clifford.hpp"

namespace helicity {

HelicityOperator helicity_operator(UnitMomentum p) {
  const auto n = p.direction();
  return {n[0] * pauli(1) + n[1] * pauli(2) + n[2] * pauli(3), p};
}

ComplexMat2 helicity_operator_closed_form(UnitMomentum p) {
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  return {c, s * std::polar(1.0, -p.phi), s * std::polar(1.0, p.phi), -c};
}

const char* to_string(Handedness h) { return h == Handedness::Right ? "Right" : "Left"; }

namespace {

struct HalfProjectorTargets {
  ComplexMat2 plus;   // (1 + sigma.p)/2
  ComplexMat2 minus;  // (1 - sigma.p)/2
};

HalfProjectorTargets targets(UnitMomentum p) {
  const auto sp = helicity_operator(p).matrix;
  const auto one = ComplexMat2::identity();
  return {0.5 * (one + sp), 0.5 * (one - sp)};
}

double eigen_residual(const ComplexMat2& op, const TwoSpinor& phi, double eigenvalue) {
  return norm(op * phi - Complex{eigenvalue} * phi);
}

}  // namespace

std::array<double, 4> projector_identities(UnitMomentum p, PhaseOffset off) {
  const auto t = targets(p);
  const auto r = phi_R(p);
  const auto l = phi_L(p, off);
  return {
      max_abs_diff(projector(r), t.plus),
      max_abs_diff(projector(charge_conj2(r)), t.minus),
      max_abs_diff(projector(charge_conj2(l)), t.plus),
      max_abs_diff(projector(l), t.minus),
  };
}

std::array<double, 4> eigen_equations(UnitMomentum p, PhaseOffset off) {
  const auto op = helicity_operator(p).matrix;
  const auto r = phi_R(p);
  const auto l = phi_L(p, off);
  return {
      eigen_residual(op, r, +1.0),
      eigen_residual(op, l, -1.0),
      eigen_residual(op, charge_conj2(r), -1.0),
      eigen_residual(op, charge_conj2(l), +1.0),
  };
}

double TheoremReport::max_residual() const {
  double m = extracted_h.residual;
  for (double r : eigen_residuals) m = std::max(m, r);
  for (double r : projector_residuals) m = std::max(m, r);
  return m;
}

TheoremReport verify_main_result(UnitMomentum p, PhaseOffset off, Handedness handedness,
                                 double tol) {
  const auto& gs = weyl_gammas();
  const TwoSpinor zero{};
  const auto psi = handedness == Handedness::Right ? assemble(phi_R(p), zero)
                                                   : assemble(zero, phi_L(p, off));

  TheoremReport report;
  report.direction = p;
  report.delta_phi = off;
  report.handedness = handedness;

  const auto sp = slash_pair(psi, gs);
  report.extracted_h = extract_helicity(sp, tol);
  const double expected_h = handedness == Handedness::Right ? 1.0 : -1.0;

  // K = h * 2 [[0, P+], [P-, 0]] for both cases, so h K/2 exposes the
  // projectors onto the +1 and -1 eigenspaces.
  const auto blocks = BlockMat4View::of(sp.K_slash);
  const double h = report.extracted_h.h;
  const auto t = targets(p);
  report.projector_residuals = {max_abs_diff(Complex{h / 2.0} * blocks.tr, t.plus),
                                max_abs_diff(Complex{h / 2.0} * blocks.bl, t.minus)};
  report.eigen_residuals = eigen_equations(p, off);

  const bool sign_ok =
      report.extracted_h.accepted() && std::abs(report.extracted_h.h - expected_h) <= tol;
  const bool residuals_ok =
      std::ranges::all_of(report.eigen_residuals, [tol](double r) { return r <= tol; }) &&
      std::ranges::all_of(report.projector_residuals, [tol](double r) { return r <= tol; });
  report.passed = sign_ok && residuals_ok;
  return report;
}

}  // namespace helicity
