#include "helicity/spinors.hpp"

#include <cmath>
#include <random>
#include <string>

namespace helicity {

UnitMomentum UnitMomentum::make(double theta, double phi) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > kPi) {
    throw std::invalid_argument("theta must lie in [0, pi], got " + std::to_string(theta));
  }
  if (!std::isfinite(phi) || phi < 0.0 || phi >= 2.0 * kPi) {
    throw std::invalid_argument("phi must lie in [0, 2pi), got " + std::to_string(phi));
  }
  return UnitMomentum{theta, phi};
}

std::array<double, 3> UnitMomentum::direction() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

NotNormalized::NotNormalized(double norm_squared)
    : std::domain_error("spinor is not normalised: <phi|phi> = " + std::to_string(norm_squared)),
      norm_squared_(norm_squared) {}

TwoSpinor phi_R(UnitMomentum p) {
  const double half = p.theta / 2.0;
  return {std::cos(half) * std::polar(1.0, -p.phi / 2.0),
          std::sin(half) * std::polar(1.0, p.phi / 2.0)};
}

TwoSpinor phi_L(UnitMomentum p, PhaseOffset off) {
  const double half = p.theta / 2.0;
  const Complex phase = std::polar(1.0, -off.delta_phi / 2.0);
  return {phase * std::sin(half) * std::polar(1.0, -p.phi / 2.0),
          -phase * std::cos(half) * std::polar(1.0, p.phi / 2.0)};
}

DiracSpinor assemble(const TwoSpinor& right, const TwoSpinor& left) {
  return {right[0], right[1], left[0], left[1]};
}

std::pair<TwoSpinor, TwoSpinor> split(const DiracSpinor& psi) {
  return {TwoSpinor{psi[0], psi[1]}, TwoSpinor{psi[2], psi[3]}};
}

ComplexRow4 dirac_adjoint(const DiracSpinor& psi, const GammaSet& gs) {
  const auto& g0 = gs.gamma[0];
  ComplexRow4 row;
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) row[j] += std::conj(psi[i]) * g0(i, j);
  return row;
}

TwoSpinor charge_conj2(const TwoSpinor& phi) {
  return {-std::conj(phi[1]), std::conj(phi[0])};
}

DiracSpinor charge_conj4(const DiracSpinor& psi, const GammaSet& gs) {
  return (-kI * gs.gamma[2]) * conj(psi);
}

ComplexMat2 projector(const TwoSpinor& phi, double tol) {
  const double n2 = inner(phi, phi).real();
  if (std::abs(n2 - 1.0) > tol) throw NotNormalized(n2);
  return outer(phi, phi);
}

namespace {

template <std::size_t N>
Vec<N> random_unit_vector(std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  // 53 random mantissa bits mapped to [-1, 1).
  auto draw = [&engine] { return static_cast<double>(engine() >> 11) * 0x1p-52 - 1.0; };
  for (;;) {
    Vec<N> v;
    for (std::size_t i = 0; i < N; ++i) v[i] = Complex{draw(), draw()};
    const double n = norm(v);
    if (n < 0.1) continue;
    for (std::size_t i = 0; i < N; ++i) v[i] /= n;
    return v;
  }
}

}  // namespace

DiracSpinor random_spinor(std::uint64_t seed) { return random_unit_vector<4>(seed); }

TwoSpinor random_two_spinor(std::uint64_t seed) { return random_unit_vector<2>(seed); }

}  // namespace helicity
