#include "helicity/bilinears.hpp"

#include <cmath>

namespace helicity {

const char* to_string(HelicityStatus s) {
  switch (s) {
    case HelicityStatus::Accepted: return "Accepted";
    case HelicityStatus::ZeroCurrent: return "ZeroCurrent";
    case HelicityStatus::NotProportional: return "NotProportional";
  }
  return "?";
}

Complex sandwich(const DiracSpinor& psi, const ComplexMat4& a, const GammaSet& gs) {
  const auto bar = dirac_adjoint(psi, gs);
  const auto a_psi = a * psi;
  Complex s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += bar[i] * a_psi[i];
  return s;
}

BilinearSet bilinear_set(const DiracSpinor& psi, const GammaSet& gs) {
  BilinearSet b{};
  b.omega1 = sandwich(psi, ComplexMat4::identity(), gs);
  for (std::size_t a = 0; a < 4; ++a) {
    b.J[a] = sandwich(psi, gs.gamma[a], gs);
    b.K[a] = sandwich(psi, gs.gamma5 * lower_index(gs, static_cast<int>(a)), gs);
    for (std::size_t c = a + 1; c < 4; ++c) {
      const auto sigma = (0.5 * kI) * (gs.gamma[a] * gs.gamma[c] - gs.gamma[c] * gs.gamma[a]);
      b.S[a][c] = sandwich(psi, sigma, gs);
      b.S[c][a] = -b.S[a][c];
    }
  }
  b.omega2 = sandwich(psi, gs.gamma5, gs);
  return b;
}

SlashPair slash_pair(const DiracSpinor& psi, const GammaSet& gs) {
  SlashPair sp;
  for (std::size_t a = 0; a < 4; ++a) {
    const auto lowered = lower_index(gs, static_cast<int>(a));
    const Complex k_a = sandwich(psi, gs.gamma5 * lowered, gs);
    const Complex j_a = sandwich(psi, gs.gamma[a], gs);
    sp.K_slash = sp.K_slash + k_a * gs.gamma[a];
    sp.J_slash = sp.J_slash + j_a * lowered;
  }
  return sp;
}

SlashPair expanded_slash_pair(const DiracSpinor& psi) {
  const Complex a = psi[0], b = psi[1], c = psi[2], d = psi[3];
  const Complex as = std::conj(a), bs = std::conj(b), cs = std::conj(c), ds = std::conj(d);

  SlashPair sp;
  auto& K = sp.K_slash;
  K(0, 2) = 2.0 * as * a - 2.0 * ds * d;
  K(0, 3) = 2.0 * bs * a + 2.0 * ds * c;
  K(1, 2) = 2.0 * as * b + 2.0 * cs * d;
  K(1, 3) = 2.0 * bs * b - 2.0 * cs * c;
  K(2, 0) = 2.0 * bs * b - 2.0 * cs * c;
  K(2, 1) = -2.0 * bs * a - 2.0 * ds * c;
  K(3, 0) = -2.0 * as * b - 2.0 * cs * d;
  K(3, 1) = 2.0 * as * a - 2.0 * ds * d;

  auto& J = sp.J_slash;
  J(0, 2) = 2.0 * as * a + 2.0 * ds * d;
  J(0, 3) = 2.0 * bs * a - 2.0 * ds * c;
  J(1, 2) = 2.0 * as * b - 2.0 * cs * d;
  J(1, 3) = 2.0 * bs * b + 2.0 * cs * c;
  J(2, 0) = 2.0 * bs * b + 2.0 * cs * c;
  J(2, 1) = -2.0 * bs * a + 2.0 * ds * c;
  J(3, 0) = -2.0 * as * b + 2.0 * cs * d;
  J(3, 1) = 2.0 * as * a + 2.0 * ds * d;
  return sp;
}

namespace {

struct HalfProjectors {
  ComplexMat2 right, right_conj, left, left_conj;
};

// Outer products without the normalisation precondition of projector().
HalfProjectors half_projectors(const DiracSpinor& psi) {
  const auto [r, l] = split(psi);
  const auto rc = charge_conj2(r);
  const auto lc = charge_conj2(l);
  return {outer(r, r), outer(rc, rc), outer(l, l), outer(lc, lc)};
}

}  // namespace

ComplexMat4 block_form_K(const DiracSpinor& psi) {
  const auto p = half_projectors(psi);
  const auto zero = ComplexMat2::zero();
  return 2.0 * from_blocks(zero, p.right - p.left_conj, p.right_conj - p.left, zero);
}

ComplexMat4 block_form_J(const DiracSpinor& psi) {
  const auto p = half_projectors(psi);
  const auto zero = ComplexMat2::zero();
  return 2.0 * from_blocks(zero, p.right + p.left_conj, p.left + p.right_conj, zero);
}

HelicityResult extract_helicity(const SlashPair& sp, double tol) {
  HelicityResult r;
  if (max_norm(sp.J_slash) < tol) {
    r.status = HelicityStatus::ZeroCurrent;
    r.residual = max_norm(sp.K_slash);
    return r;
  }
  double jk = 0.0;
  double jj = 0.0;
  auto k_it = sp.K_slash.begin();
  for (const auto& j : sp.J_slash) {
    jk += (std::conj(j) * *k_it++).real();
    jj += std::norm(j);
  }
  r.h = jk / jj;
  r.residual = max_abs_diff(sp.K_slash, r.h * sp.J_slash);
  r.status = r.residual <= tol ? HelicityStatus::Accepted : HelicityStatus::NotProportional;
  return r;
}

}  // namespace helicity
