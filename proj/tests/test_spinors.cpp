#include <doctest.h>

#include <cmath>
#include <set>

#include "helicity/spinors.hpp"
#include "helicity/theorem.hpp"
#include "oracle.hpp"

using namespace helicity;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

double diff(const TwoSpinor& a, const TwoSpinor& b) { return max_abs_diff(a, b); }

oracle::Spinor4 to_oracle(const DiracSpinor& p) { return {p[0], p[1], p[2], p[3]}; }

}  // namespace

TEST_CASE("UnitMomentum validation and direction") {
  CHECK_NOTHROW(UnitMomentum::make(0.0, 0.0));
  CHECK_NOTHROW(UnitMomentum::make(kPi, 6.28));
  CHECK_THROWS_AS(UnitMomentum::make(-0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(UnitMomentum::make(3.2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(UnitMomentum::make(1.0, 2.0 * kPi), std::invalid_argument);
  CHECK_THROWS_AS(UnitMomentum::make(std::nan(""), 0.0), std::invalid_argument);
  for (int i = 0; i <= 32; ++i)
    for (int j = 0; j < 32; ++j) {
      const auto n = UnitMomentum{kPi * i / 32, 2 * kPi * j / 32}.direction();
      CHECK(std::abs(std::hypot(n[0], n[1], n[2]) - 1.0) <= 1e-14);
    }
}

TEST_CASE("phi_R examples") {
  CHECK(diff(phi_R({0.0, 0.0}), {1.0, 0.0}) <= 1e-15);
  CHECK(diff(phi_R({kPi, 0.0}), {0.0, 1.0}) <= 1e-15);
  CHECK(diff(phi_R({kPi / 2, 0.0}), {kInvSqrt2, kInvSqrt2}) <= 1e-15);
}

TEST_CASE("phi_L examples") {
  CHECK(diff(phi_L({0.0, 0.0}), {0.0, -1.0}) <= 1e-15);
  CHECK(diff(phi_L({kPi / 2, 0.0}), {kInvSqrt2, -kInvSqrt2}) <= 1e-15);
}

TEST_CASE("phase offset multiplies the whole left-handed spinor") {
  // Delta phi = pi at theta = pi/2, phi = 0: e^{-i pi/2} (1, -1)/sqrt2.
  CHECK(diff(phi_L({kPi / 2, 0.0}, {kPi}), {-kI * kInvSqrt2, kI * kInvSqrt2}) <= 1e-15);

  // Substituting phi' = phi + pi into both half-angle phases gives
  // (-i, -i)/sqrt2 instead. That vector is the left-handed state of the
  // rotated direction phi = pi and has eigenvalue +1, not -1, for sigma_1.
  const TwoSpinor shifted{-kI * kInvSqrt2, -kI * kInvSqrt2};
  CHECK(diff(phi_L({kPi / 2, kPi}), shifted) <= 1e-15);
  const auto op = helicity_operator({kPi / 2, 0.0}).matrix;
  CHECK(norm(op * shifted - shifted) <= 1e-15);

  for (double dphi : {0.3, 1.7, kPi, 5.0}) {
    const UnitMomentum p{0.9, 2.1};
    const auto l0 = phi_L(p);
    const auto l = phi_L(p, {dphi});
    CHECK(diff(l, std::polar(1.0, -dphi / 2) * l0) <= 1e-15);
  }
}

TEST_CASE("momentum-space spinors are normalised and mutually orthogonal") {
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j)
      for (double dphi : {0.0, 1.7}) {
        const UnitMomentum p{kPi * i / 63, 2 * kPi * j / 64};
        const auto r = phi_R(p);
        const auto l = phi_L(p, {dphi});
        CHECK(std::abs(norm(r) - 1.0) <= 1e-14);
        CHECK(std::abs(norm(l) - 1.0) <= 1e-14);
        CHECK(std::abs(inner(r, l)) <= 1e-14);
      }
}

TEST_CASE("assemble and split") {
  CHECK(assemble({1.0, 0.0}, {0.0, 0.0}) == DiracSpinor{1.0, 0.0, 0.0, 0.0});
  CHECK(assemble({0.0, 0.0}, {0.0, 1.0}) == DiracSpinor{0.0, 0.0, 0.0, 1.0});
  const DiracSpinor psi{{1, 2}, {3, 4}, {5, 6}, {7, 8}};
  const auto [r, l] = split(psi);
  CHECK(r == TwoSpinor{{1, 2}, {3, 4}});
  CHECK(l == TwoSpinor{{5, 6}, {7, 8}});
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto a = random_two_spinor(s), b = random_two_spinor(s + 1000);
    const auto [ra, lb] = split(assemble(a, b));
    CHECK(ra == a);
    CHECK(lb == b);
  }
}

TEST_CASE("Dirac adjoint") {
  const auto& gs = weyl_gammas();
  CHECK(dirac_adjoint({1.0, 0.0, 0.0, 0.0}, gs) == ComplexRow4{0.0, 0.0, 1.0, 0.0});
  CHECK(dirac_adjoint({0.0, 0.0, 1.0, 0.0}, gs) == ComplexRow4{1.0, 0.0, 0.0, 0.0});
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto psi = random_spinor(s);
    const auto expected = oracle::weyl_adjoint(to_oracle(psi));
    const auto row = dirac_adjoint(psi, gs);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(row[i] - expected[i]) <= 1e-15);
  }
}

TEST_CASE("charge_conj2 examples") {
  CHECK(charge_conj2({1.0, 0.0}) == TwoSpinor{0.0, 1.0});
  CHECK(charge_conj2({0.0, 1.0}) == TwoSpinor{-1.0, 0.0});
  for (int i = 0; i <= 16; ++i)
    for (int j = 0; j < 16; ++j) {
      const double t = kPi * i / 16, f = 2 * kPi * j / 16;
      const TwoSpinor expected{-std::sin(t / 2) * std::polar(1.0, -f / 2),
                               std::cos(t / 2) * std::polar(1.0, f / 2)};
      CHECK(diff(charge_conj2(phi_R({t, f})), expected) <= 1e-15);
    }
}

TEST_CASE("charge_conj2 invariants on random 2-spinors") {
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const auto phi = Complex{0.3 + s % 7, -1.0} * random_two_spinor(s);  // not normalised
    const auto c = charge_conj2(phi);
    CHECK(std::abs(inner(phi, c)) <= 1e-14 * std::max(1.0, norm(phi) * norm(phi)));
    CHECK(std::abs(norm(c) - norm(phi)) <= 1e-14 * std::max(1.0, norm(phi)));
    CHECK(charge_conj2(c) == -phi);
  }
}

TEST_CASE("charge_conj4 examples and block form") {
  const auto& gs = weyl_gammas();
  CHECK(charge_conj4({1.0, 0.0, 0.0, 0.0}, gs) == DiracSpinor{0.0, 0.0, 0.0, -1.0});
  CHECK(charge_conj4({0.0, 0.0, 1.0, 0.0}, gs) == DiracSpinor{0.0, 1.0, 0.0, 0.0});

  for (std::uint64_t s = 0; s < 1000; ++s) {
    const auto psi = random_spinor(s);
    const auto c = charge_conj4(psi, gs);
    const auto [r, l] = split(psi);
    CHECK(max_abs_diff(c, assemble(charge_conj2(l), -charge_conj2(r))) <= 1e-14);
    const auto expected = oracle::charge_conj4(to_oracle(psi));
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(c[i] - expected[i]) <= 1e-15);
    // With the -i gamma^2 convention the 4-spinor map is an involution.
    CHECK(max_abs_diff(charge_conj4(c, gs), psi) <= 1e-15);
  }
}

TEST_CASE("projector") {
  CHECK(projector({1.0, 0.0}) == ComplexMat2{1.0, 0.0, 0.0, 0.0});
  CHECK(max_abs_diff(projector({kInvSqrt2, kInvSqrt2}), ComplexMat2{0.5, 0.5, 0.5, 0.5}) <= 1e-15);
  CHECK_THROWS_AS(projector({1.0, 1.0}), NotNormalized);
  CHECK_THROWS_AS(projector({0.0, 0.0}), NotNormalized);
  try {
    projector({2.0, 0.0});
  } catch (const NotNormalized& e) {
    CHECK(e.norm_squared() == doctest::Approx(4.0));
  }

  for (int i = 0; i <= 16; ++i)
    for (int j = 0; j < 16; ++j) {
      const UnitMomentum p{kPi * i / 16, 2 * kPi * j / 16};
      const auto P = projector(phi_R(p));
      const auto target = Complex{0.5} * (ComplexMat2::identity() + helicity_operator(p).matrix);
      CHECK(max_abs_diff(P, target) <= 1e-15);
      CHECK(max_abs_diff(dagger(P), P) == 0.0);
      CHECK(max_abs_diff(P * P, P) <= 1e-15);
      CHECK(std::abs(P.trace() - 1.0) <= 1e-15);
    }
}

TEST_CASE("random_spinor contract") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto a = random_spinor(s);
    CHECK(a == random_spinor(s));
    CHECK(std::abs(norm(a) - 1.0) <= 1e-12);
  }
  std::set<std::pair<double, double>> seen;
  for (std::uint64_t s = 0; s < 100; ++s) {
    CHECK(random_spinor(2 * s) != random_spinor(2 * s + 1));
    seen.emplace(random_spinor(s)[0].real(), random_spinor(s)[0].imag());
  }
  CHECK(seen.size() == 100);
}

TEST_CASE("random_spinor is pinned across platforms") {
  // mt19937_64 is fully specified by the standard; the draw and the
  // normalisation use only correctly rounded operations.
  const auto psi = random_spinor(1);
  const DiracSpinor frozen{
      Complex{-0x1.919bf19ca0c5bp-2, -0x1.8ed560e461ccap-2},
      Complex{-0x1.ac1ba488ef57fp-5, -0x1.06b3253a03a14p-1},
      Complex{-0x1.471b49f75cfc8p-3, 0x1.c33a66e5534dcp-2},
      Complex{-0x1.00a949f67e878p-5, -0x1.d2d2af8f60ec2p-2},
  };
  for (std::size_t i = 0; i < 4; ++i) CHECK(psi[i] == frozen[i]);
}
