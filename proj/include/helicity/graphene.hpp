#pragma once

// Monolayer graphene near a Dirac point: the vertex Hamiltonian and its
// reconstruction from the axial-vector slash matrix of a left-handed state.

#include <stdexcept>

#include "helicity/numerics.hpp"
#include "helicity/spinors.hpp"

namespace helicity {

struct GrapheneParams {
  double hbar = 1.0;
  double v_F = 1.0;

  /// Validating constructor; both must be positive and finite.
  static GrapheneParams make(double hbar, double v_F);

  double scale() const { return hbar * v_F; }
};

struct PlanarWavevector {
  double kx = 0.0;
  double ky = 0.0;

  double magnitude() const;
};

class ZeroWavevector : public std::domain_error {
public:
  ZeroWavevector();
};

/// hbar v_F [[0, kx - i ky], [kx + i ky, 0]]
ComplexMat2 hamiltonian(PlanarWavevector k, GrapheneParams params = {});

/// (theta = pi/2, phi = atan2(ky, kx) in [0, 2pi)). Throws ZeroWavevector.
UnitMomentum planar_to_unit_momentum(PlanarWavevector k);

/// K for psi = (0, phi_L(p, off)), i.e. 2 [[0, -P(phi_L^C)], [-P(phi_L), 0]].
ComplexMat4 restricted_K(UnitMomentum p, PhaseOffset off = {});

/// Same construction with the left-handed half zeroed instead.
ComplexMat4 restricted_K_right(UnitMomentum p);

/// (hbar v_F |k| / 2) * block_partial_trace(gamma^5 K gamma^0), equal to
/// hamiltonian(k, params).
ComplexMat2 trace_reconstruction(PlanarWavevector k, PhaseOffset off = {},
                                 GrapheneParams params = {});

struct GrapheneReconstruction {
  ComplexMat2 hamiltonian;
  ComplexMat2 reconstructed;         // prefactor hbar v_F |k| / 2
  ComplexMat2 inverse_k_reading;     // prefactor hbar v_F / (2 |k|)
  double prefactor_ratio = 0.0;      // reconstructed / inverse_k_reading = |k|^2
  double residual = 0.0;             // max |reconstructed - hamiltonian|
  /// Sign s with reconstruction from the phi_L = 0 restriction = s * hamiltonian.
  double right_restriction_sign = 0.0;
  double right_restriction_residual = 0.0;  // max |s * right - hamiltonian|
};

GrapheneReconstruction reconstruct(PlanarWavevector k, PhaseOffset off = {},
                                   GrapheneParams params = {});

}  // namespace helicity
