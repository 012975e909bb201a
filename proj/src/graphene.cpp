#include "helicity/graphene.hpp"

#include <algorithm>
#include <cmath>

#include "helicity/bilinears.hpp"
#include "helicity/clifford.hpp"

namespace helicity {

GrapheneParams GrapheneParams::make(double hbar, double v_F) {
  if (!(std::isfinite(hbar) && hbar > 0.0) || !(std::isfinite(v_F) && v_F > 0.0)) {
    throw std::invalid_argument("hbar and v_F must be positive and finite");
  }
  return {hbar, v_F};
}

double PlanarWavevector::magnitude() const { return std::hypot(kx, ky); }

ZeroWavevector::ZeroWavevector()
    : std::domain_error("wavevector has zero magnitude; direction undefined") {}

ComplexMat2 hamiltonian(PlanarWavevector k, GrapheneParams params) {
  const Complex s = params.scale();
  return {0.0, s * Complex{k.kx, -k.ky}, s * Complex{k.kx, k.ky}, 0.0};
}

UnitMomentum planar_to_unit_momentum(PlanarWavevector k) {
  const double mag = k.magnitude();
  if (!(mag >= 1e-12 * std::max({1.0, std::abs(k.kx), std::abs(k.ky)}))) throw ZeroWavevector();
  double phi = std::atan2(k.ky, k.kx);
  if (phi < 0.0) phi += 2.0 * kPi;
  if (phi >= 2.0 * kPi) phi = 0.0;
  return UnitMomentum{kPi / 2.0, phi};
}

ComplexMat4 restricted_K(UnitMomentum p, PhaseOffset off) {
  return block_form_K(assemble(TwoSpinor{}, phi_L(p, off)));
}

ComplexMat4 restricted_K_right(UnitMomentum p) {
  return block_form_K(assemble(phi_R(p), TwoSpinor{}));
}

namespace {

ComplexMat2 chiral_block_trace(const ComplexMat4& k_slash) {
  const auto& gs = weyl_gammas();
  return block_partial_trace(gs.gamma5 * k_slash * gs.gamma[0]);
}

}  // namespace

ComplexMat2 trace_reconstruction(PlanarWavevector k, PhaseOffset off, GrapheneParams params) {
  const auto p = planar_to_unit_momentum(k);
  const double prefactor = params.scale() * k.magnitude() / 2.0;
  return Complex{prefactor} * chiral_block_trace(restricted_K(p, off));
}

GrapheneReconstruction reconstruct(PlanarWavevector k, PhaseOffset off, GrapheneParams params) {
  const auto p = planar_to_unit_momentum(k);
  const double mag = k.magnitude();
  const auto traced = chiral_block_trace(restricted_K(p, off));

  GrapheneReconstruction r;
  r.hamiltonian = hamiltonian(k, params);
  const double corrected = params.scale() * mag / 2.0;
  const double inverse_k = params.scale() / (2.0 * mag);
  r.reconstructed = Complex{corrected} * traced;
  r.inverse_k_reading = Complex{inverse_k} * traced;
  r.prefactor_ratio = corrected / inverse_k;
  r.residual = max_abs_diff(r.reconstructed, r.hamiltonian);

  const auto right = Complex{corrected} * chiral_block_trace(restricted_K_right(p));
  const auto plus = max_abs_diff(right, r.hamiltonian);
  const auto minus = max_abs_diff(-right, r.hamiltonian);
  r.right_restriction_sign = plus <= minus ? 1.0 : -1.0;
  r.right_restriction_residual = std::min(plus, minus);
  return r;
}

}  // namespace helicity
