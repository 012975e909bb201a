#pragma once

// Fixed-size complex vectors and matrices (2 and 4 dimensional) used as the
// representation substrate for Pauli and gamma matrices. No physics here.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <ostream>

namespace helicity {

using Complex = std::complex<double>;

/// Default tolerance for entrywise max-norm comparisons.
inline constexpr double kMatrixTolerance = 1e-12;

inline constexpr Complex kI{0.0, 1.0};

template <std::size_t N>
class Vec {
public:
  constexpr Vec() = default;
  constexpr Vec(std::initializer_list<Complex> values) {
    std::copy_n(values.begin(), std::min(values.size(), N), c_.begin());
  }

  static constexpr std::size_t size() { return N; }

  constexpr Complex& operator[](std::size_t i) { return c_[i]; }
  constexpr const Complex& operator[](std::size_t i) const { return c_[i]; }

  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  friend Vec operator+(const Vec& a, const Vec& b) {
    Vec r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
    return r;
  }
  friend Vec operator-(const Vec& a, const Vec& b) {
    Vec r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
    return r;
  }
  friend Vec operator-(const Vec& a) {
    Vec r;
    for (std::size_t i = 0; i < N; ++i) r[i] = -a[i];
    return r;
  }
  friend Vec operator*(Complex s, const Vec& a) {
    Vec r;
    for (std::size_t i = 0; i < N; ++i) r[i] = s * a[i];
    return r;
  }

  friend bool operator==(const Vec&, const Vec&) = default;

private:
  std::array<Complex, N> c_{};
};

template <std::size_t N>
class Mat {
public:
  constexpr Mat() = default;

  /// Row-major initialisation; missing entries are zero.
  constexpr Mat(std::initializer_list<Complex> row_major) {
    std::copy_n(row_major.begin(), std::min(row_major.size(), N * N), e_.begin());
  }

  static constexpr std::size_t dim() { return N; }

  static constexpr Mat zero() { return Mat{}; }
  static constexpr Mat identity() {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  constexpr Complex& operator()(std::size_t i, std::size_t j) { return e_[i * N + j]; }
  constexpr const Complex& operator()(std::size_t i, std::size_t j) const { return e_[i * N + j]; }

  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    Mat r;
    for (std::size_t k = 0; k < N * N; ++k) r.e_[k] = a.e_[k] + b.e_[k];
    return r;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    Mat r;
    for (std::size_t k = 0; k < N * N; ++k) r.e_[k] = a.e_[k] - b.e_[k];
    return r;
  }
  friend Mat operator-(const Mat& a) {
    Mat r;
    for (std::size_t k = 0; k < N * N; ++k) r.e_[k] = -a.e_[k];
    return r;
  }
  friend Mat operator*(Complex s, const Mat& a) {
    Mat r;
    for (std::size_t k = 0; k < N * N; ++k) r.e_[k] = s * a.e_[k];
    return r;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Vec<N> operator*(const Mat& a, const Vec<N>& v) {
    Vec<N> r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r[i] += a(i, j) * v[j];
    return r;
  }

  friend bool operator==(const Mat&, const Mat&) = default;

private:
  std::array<Complex, N * N> e_{};
};

using ComplexVec2 = Vec<2>;
using ComplexVec4 = Vec<4>;
using ComplexMat2 = Mat<2>;
using ComplexMat4 = Mat<4>;

/// The four 2x2 blocks of a 4x4 matrix.
struct BlockMat4View {
  ComplexMat2 tl, tr, bl, br;

  static BlockMat4View of(const ComplexMat4& m);
  ComplexMat4 recompose() const;
};

ComplexMat4 from_blocks(const ComplexMat2& tl, const ComplexMat2& tr,
                        const ComplexMat2& bl, const ComplexMat2& br);

template <std::size_t N>
Mat<N> dagger(const Mat<N>& m) {
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

template <std::size_t N>
Vec<N> conj(const Vec<N>& v) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = std::conj(v[i]);
  return r;
}

/// |u><v|, i.e. result(i,j) = u[i] * conj(v[j]).
template <std::size_t N>
Mat<N> outer(const Vec<N>& u, const Vec<N>& v) {
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = u[i] * std::conj(v[j]);
  return r;
}

/// <u|v>, antilinear in the first argument.
template <std::size_t N>
Complex inner(const Vec<N>& u, const Vec<N>& v) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += std::conj(u[i]) * v[i];
  return s;
}

template <std::size_t N>
double norm(const Vec<N>& v) {
  double s = 0.0;
  for (const auto& c : v) s += std::norm(c);
  return std::sqrt(s);
}

template <std::size_t N>
double max_norm(const Mat<N>& m) {
  double r = 0.0;
  for (const auto& c : m) r = std::max(r, std::abs(c));
  return r;
}

template <std::size_t N>
double max_abs_diff(const Mat<N>& a, const Mat<N>& b) {
  return max_norm(a - b);
}

template <std::size_t N>
double max_abs_diff(const Vec<N>& a, const Vec<N>& b) {
  double r = 0.0;
  for (std::size_t i = 0; i < N; ++i) r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

template <std::size_t N>
bool approx_equal(const Mat<N>& a, const Mat<N>& b, double tol = kMatrixTolerance) {
  return max_abs_diff(a, b) <= tol;
}

template <std::size_t N>
bool is_finite(const Mat<N>& m) {
  return std::all_of(m.begin(), m.end(), [](const Complex& c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

template <std::size_t N>
bool is_finite(const Vec<N>& v) {
  return std::all_of(v.begin(), v.end(), [](const Complex& c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

/// Sum of the two diagonal 2x2 blocks (tl + br).
ComplexMat2 block_partial_trace(const ComplexMat4& m);

template <std::size_t N>
std::ostream& operator<<(std::ostream& os, const Mat<N>& m) {
  for (std::size_t i = 0; i < N; ++i) {
    os << "[";
    for (std::size_t j = 0; j < N; ++j) os << (j ? ", " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

template <std::size_t N>
std::ostream& operator<<(std::ostream& os, const Vec<N>& v) {
  os << "(";
  for (std::size_t i = 0; i < N; ++i) os << (i ? ", " : "") << v[i];
  return os << ")";
}

}  // namespace helicity
