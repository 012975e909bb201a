#pragma once

// Executable form of the implication "K = hJ  =>  (sigma.p)|phi> = +-|phi>".
// Every check starts from a Dirac spinor, extracts h from its bilinears and
// only then derives eigenvalue statements for the 2-spinor halves.

#include <array>

#include "helicity/bilinears.hpp"
#include "helicity/numerics.hpp"
#include "helicity/spinors.hpp"

namespace helicity {

struct HelicityOperator {
  ComplexMat2 matrix;
  UnitMomentum direction;
};

/// sigma_1 p_1 + sigma_2 p_2 + sigma_3 p_3 with p from the spherical angles.
HelicityOperator helicity_operator(UnitMomentum p);

/// Closed form [[cos t, sin t e^{-i phi}], [sin t e^{i phi}, -cos t]].
ComplexMat2 helicity_operator_closed_form(UnitMomentum p);

enum class Handedness { Right, Left };

const char* to_string(Handedness h);

/// Max-norm residuals of
///   P(phi_R)  = (1 + sigma.p)/2,   P(phi_R^C) = (1 - sigma.p)/2,
///   P(phi_L^C) = (1 + sigma.p)/2,  P(phi_L)   = (1 - sigma.p)/2.
std::array<double, 4> projector_identities(UnitMomentum p, PhaseOffset off = {});

/// 2-norm residuals |(sigma.p)phi -+ phi| for phi_R (+1), phi_L (-1),
/// phi_R^C (-1) and phi_L^C (+1), in that order.
std::array<double, 4> eigen_equations(UnitMomentum p, PhaseOffset off = {});

struct TheoremReport {
  UnitMomentum direction;
  PhaseOffset delta_phi;
  Handedness handedness = Handedness::Right;
  HelicityResult extracted_h;
  std::array<double, 4> eigen_residuals{};
  /// Projectors read off the two non-zero blocks of K, compared with
  /// (1 +- sigma.p)/2: (top-right, bottom-left).
  std::array<double, 2> projector_residuals{};
  bool passed = false;

  double max_residual() const;
};

/// Builds psi with the opposite-handed half zeroed, extracts h from K = hJ and
/// checks the sign against the handedness, then verifies the projector
/// identities (taken from the blocks of K) and the four eigen equations.
TheoremReport verify_main_result(UnitMomentum p, PhaseOffset off, Handedness handedness,
                                 double tol = kHelicityTolerance);

}  // namespace helicity
