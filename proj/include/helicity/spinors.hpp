#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "helicity/clifford.hpp"
#include "helicity/numerics.hpp"

namespace helicity {

using TwoSpinor = ComplexVec2;
/// Components (a, b, c, d); (a, b) is the right-handed half, (c, d) the left.
using DiracSpinor = ComplexVec4;
/// Row vector, e.g. a Dirac adjoint.
using ComplexRow4 = ComplexVec4;

inline constexpr double kPi = 3.14159265358979323846;

/// Direction on the unit sphere, theta in [0, pi], phi in [0, 2pi).
struct UnitMomentum {
  double theta = 0.0;
  double phi = 0.0;

  /// Validating constructor; throws std::invalid_argument outside the ranges.
  static UnitMomentum make(double theta, double phi);

  std::array<double, 3> direction() const;
};

/// Relative phase between the left- and right-handed momentum-space solutions.
/// It multiplies the whole left-handed spinor by exp(-i delta_phi / 2), so it
/// never changes which direction the state is an eigenvector for.
struct PhaseOffset {
  double delta_phi = 0.0;
};

class NotNormalized : public std::domain_error {
public:
  explicit NotNormalized(double norm_squared);
  double norm_squared() const { return norm_squared_; }

private:
  double norm_squared_;
};

/// Positive-helicity eigenvector of sigma.p-hat.
TwoSpinor phi_R(UnitMomentum p);
/// Negative-helicity eigenvector of sigma.p-hat, carrying the phase offset.
TwoSpinor phi_L(UnitMomentum p, PhaseOffset off = {});

DiracSpinor assemble(const TwoSpinor& right, const TwoSpinor& left);
std::pair<TwoSpinor, TwoSpinor> split(const DiracSpinor& psi);

/// psi^dagger gamma^0 as a row vector.
ComplexRow4 dirac_adjoint(const DiracSpinor& psi, const GammaSet& gs);

/// -i sigma_2 phi^*: (c0, c1) -> (-c1^*, c0^*).
TwoSpinor charge_conj2(const TwoSpinor& phi);
/// -i gamma^2 psi^*.
DiracSpinor charge_conj4(const DiracSpinor& psi, const GammaSet& gs);

/// |phi><phi| for a normalised phi; throws NotNormalized otherwise.
ComplexMat2 projector(const TwoSpinor& phi, double tol = kMatrixTolerance);

/// Deterministic normalised spinor. Uses only integer arithmetic, division
/// and sqrt, so outputs are bit-identical across platforms.
DiracSpinor random_spinor(std::uint64_t seed);
TwoSpinor random_two_spinor(std::uint64_t seed);

}  // namespace helicity
