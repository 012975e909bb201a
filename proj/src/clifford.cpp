#include "helicity/clifford.hpp"

#include <bit>
#include <stdexcept>
#include <utility>
#include <vector>

namespace helicity {

const ComplexMat2& pauli(int a) {
  static const std::array<ComplexMat2, 3> sigma{
      ComplexMat2{0.0, 1.0, 1.0, 0.0},
      ComplexMat2{0.0, -kI, kI, 0.0},
      ComplexMat2{1.0, 0.0, 0.0, -1.0},
  };
  if (a < 1 || a > 3) throw std::out_of_range("pauli index must be 1, 2 or 3");
  return sigma[static_cast<std::size_t>(a - 1)];
}

GammaSet build_gamma_set() {
  const auto one = ComplexMat2::identity();
  const auto zero = ComplexMat2::zero();

  GammaSet gs;
  gs.gamma[0] = from_blocks(zero, one, one, zero);
  for (int a = 1; a <= 3; ++a) {
    gs.gamma[static_cast<std::size_t>(a)] = from_blocks(zero, pauli(a), -pauli(a), zero);
  }
  gs.gamma5 = kI * (gs.gamma[0] * gs.gamma[1] * gs.gamma[2] * gs.gamma[3]);
  return gs;
}

const GammaSet& weyl_gammas() {
  static const GammaSet gs = build_gamma_set();
  return gs;
}

ComplexMat4 anticommutator(const ComplexMat4& a, const ComplexMat4& b) { return a * b + b * a; }

ComplexMat4 lower_index(const GammaSet& gs, int a) {
  if (a < 0 || a > 3) throw std::out_of_range("spacetime index must be in 0..3");
  const auto idx = static_cast<std::size_t>(a);
  return gs.eta[idx] * gs.gamma[idx];
}

std::array<int, 5> CliffordBasis::grade_counts() const {
  std::array<int, 5> counts{};
  for (const auto& e : elements) ++counts[static_cast<std::size_t>(e.grade)];
  return counts;
}

CliffordBasis build_basis16(const GammaSet& gs) {
  CliffordBasis basis;
  std::size_t n = 0;
  // Enumerate subsets of {0,1,2,3} by size, indices in increasing order.
  for (int k = 0; k <= 4; ++k) {
    for (unsigned mask = 0; mask < 16; ++mask) {
      if (std::popcount(mask) != k) continue;
      std::string label;
      auto m = ComplexMat4::identity();
      for (int i = 0; i < 4; ++i) {
        if (mask & (1u << i)) {
          m = m * gs.gamma[static_cast<std::size_t>(i)];
          label += "g" + std::to_string(i);
        }
      }
      if (label.empty()) label = "1";
      basis.elements[n++] = BasisElement{std::move(label), static_cast<Grade>(k), m};
    }
  }
  return basis;
}

int numerical_rank(std::span<const ComplexMat4> matrices, double tol) {
  constexpr std::size_t cols = 16;
  std::vector<std::array<Complex, cols>> rows;
  rows.reserve(matrices.size());
  for (const auto& m : matrices) {
    std::array<Complex, cols> r;
    std::copy(m.begin(), m.end(), r.begin());
    rows.push_back(r);
  }

  int rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t best = pivot_row;
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      if (std::abs(rows[r][col]) > std::abs(rows[best][col])) best = r;
    }
    if (std::abs(rows[best][col]) <= tol) continue;
    std::swap(rows[pivot_row], rows[best]);
    const Complex p = rows[pivot_row][col];
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      const Complex f = rows[r][col] / p;
      if (f == Complex{}) continue;
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[pivot_row][c];
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

}  // namespace helicity
