#pragma once

#include <array>

#include "helicity/clifford.hpp"
#include "helicity/numerics.hpp"
#include "helicity/spinors.hpp"

namespace helicity {

/// Default acceptance tolerance for the K = hJ residual.
inline constexpr double kHelicityTolerance = 1e-10;

/// The five bilinear covariants of a Dirac spinor.
struct BilinearSet {
  Complex omega1;                          // psibar psi
  std::array<Complex, 4> J;                // J^a = psibar gamma^a psi
  std::array<std::array<Complex, 4>, 4> S; // S^{ab} = psibar (i/2)[gamma^a, gamma^b] psi
  std::array<Complex, 4> K;                // K_a = psibar gamma^5 gamma_a psi
  Complex omega2;                          // psibar gamma^5 psi
};

/// K = K_a gamma^a and J = J^a gamma_a.
struct SlashPair {
  ComplexMat4 K_slash;
  ComplexMat4 J_slash;
};

enum class HelicityStatus { Accepted, ZeroCurrent, NotProportional };

const char* to_string(HelicityStatus s);

struct HelicityResult {
  double h = 0.0;
  double residual = 0.0;  // max |K - hJ|
  HelicityStatus status = HelicityStatus::Accepted;

  bool accepted() const { return status == HelicityStatus::Accepted; }
};

/// psibar A psi
Complex sandwich(const DiracSpinor& psi, const ComplexMat4& a, const GammaSet& gs);

BilinearSet bilinear_set(const DiracSpinor& psi, const GammaSet& gs);

SlashPair slash_pair(const DiracSpinor& psi, const GammaSet& gs);

/// Both slash matrices assembled entry by entry from closed-form quadratic
/// expressions in (a, b, c, d). Independent of the gamma matrices.
SlashPair expanded_slash_pair(const DiracSpinor& psi);

/// K = 2 [[0, P_R - P_Lc], [P_Rc - P_L, 0]] with P_X = |X><X| built from the
/// two halves of psi and their charge conjugates.
ComplexMat4 block_form_K(const DiracSpinor& psi);
/// J = 2 [[0, P_R + P_Lc], [P_L + P_Rc, 0]].
ComplexMat4 block_form_J(const DiracSpinor& psi);

/// Least-squares h = Re<J,K>/<J,J> over all sixteen entries; accepted iff the
/// max-norm residual |K - hJ| is within tol.
HelicityResult extract_helicity(const SlashPair& sp, double tol = kHelicityTolerance);

}  // namespace helicity
