#pragma once

#include <array>
#include <span>
#include <string>

#include "helicity/numerics.hpp"

namespace helicity {

/// Pauli matrix sigma_a for a in {1,2,3}.
const ComplexMat2& pauli(int a);

/// Weyl-basis gamma matrices with Minkowski metric (+,-,-,-).
struct GammaSet {
  std::array<ComplexMat4, 4> gamma;  // contravariant gamma^a
  ComplexMat4 gamma5;
  std::array<double, 4> eta{1.0, -1.0, -1.0, -1.0};  // diagonal of eta^{ab}

  const ComplexMat4& operator[](std::size_t a) const { return gamma.at(a); }
};

GammaSet build_gamma_set();

/// Shared immutable Weyl-basis set.
const GammaSet& weyl_gammas();

/// ab + ba
ComplexMat4 anticommutator(const ComplexMat4& a, const ComplexMat4& b);

/// gamma_a = eta_{ab} gamma^b. Throws std::out_of_range for a outside 0..3.
ComplexMat4 lower_index(const GammaSet& gs, int a);

enum class Grade { Scalar = 0, Vector = 1, Tensor = 2, AxialVector = 3, PseudoScalar = 4 };

struct BasisElement {
  std::string label;  // e.g. "g0g2"
  Grade grade;
  ComplexMat4 matrix;
};

/// The sixteen ordered products gamma^{i1}...gamma^{ik}, i1 < ... < ik.
struct CliffordBasis {
  std::array<BasisElement, 16> elements;

  std::array<int, 5> grade_counts() const;
  const BasisElement& pseudo_scalar() const { return elements.back(); }
};

CliffordBasis build_basis16(const GammaSet& gs);

/// Rank of the set of matrices viewed as flattened complex 16-vectors,
/// by Gaussian elimination with partial pivoting.
int numerical_rank(std::span<const ComplexMat4> matrices, double tol = 1e-10);

}  // namespace helicity
