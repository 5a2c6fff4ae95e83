#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace mdstress {

using Complex = std::complex<double>;

inline constexpr Complex kImag{0.0, 1.0};

/// Minkowski metric diag(+1,-1,-1,-1); diagonal, so upper and lower agree.
constexpr double eta(int mu, int nu) {
  return mu == nu ? (mu == 0 ? 1.0 : -1.0) : 0.0;
}

/// Diagonal entry of the metric.
constexpr double eta_sign(int mu) { return mu == 0 ? 1.0 : -1.0; }

using Vec4c = std::array<Complex, 4>;
using Vec4d = std::array<double, 4>;
using Rank2c = std::array<std::array<Complex, 4>, 4>;
using Rank2d = std::array<std::array<double, 4>, 4>;
using Rank3c = std::array<Rank2c, 4>;

/// Dense 4x4 complex matrix, row major.  Only the operations the Clifford
/// algebra kernels need; not a general linear-algebra type.
struct Mat4 {
  std::array<Complex, 16> e{};

  Complex& operator()(int r, int c) { return e[static_cast<std::size_t>(4 * r + c)]; }
  const Complex& operator()(int r, int c) const { return e[static_cast<std::size_t>(4 * r + c)]; }

  static Mat4 zero() { return {}; }

  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }

  Mat4& operator+=(const Mat4& o) {
    for (std::size_t i = 0; i < 16; ++i) e[i] += o.e[i];
    return *this;
  }
  Mat4& operator-=(const Mat4& o) {
    for (std::size_t i = 0; i < 16; ++i) e[i] -= o.e[i];
    return *this;
  }
  Mat4& operator*=(Complex z) {
    for (auto& v : e) v *= z;
    return *this;
  }
};

inline Mat4 operator+(Mat4 a, const Mat4& b) { return a += b; }
inline Mat4 operator-(Mat4 a, const Mat4& b) { return a -= b; }
inline Mat4 operator*(Complex z, Mat4 m) { return m *= z; }
inline Mat4 operator*(double x, Mat4 m) { return m *= Complex{x, 0.0}; }
inline Mat4 operator-(Mat4 m) { return m *= Complex{-1.0, 0.0}; }

inline Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

inline Vec4c operator*(const Mat4& m, const Vec4c& v) {
  Vec4c r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[static_cast<std::size_t>(i)] += m(i, j) * v[static_cast<std::size_t>(j)];
  return r;
}

inline Mat4 commutator(const Mat4& a, const Mat4& b) { return a * b - b * a; }
inline Mat4 anticommutator(const Mat4& a, const Mat4& b) { return a * b + b * a; }

inline Complex trace(const Mat4& m) { return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3); }

inline double max_abs(const Mat4& m) {
  double r = 0.0;
  for (const auto& v : m.e) r = std::max(r, std::abs(v));
  return r;
}

inline double max_abs_diff(const Mat4& a, const Mat4& b) {
  double r = 0.0;
  for (std::size_t i = 0; i < 16; ++i) r = std::max(r, std::abs(a.e[i] - b.e[i]));
  return r;
}

inline double max_abs(const Vec4c& v) {
  double r = 0.0;
  for (const auto& z : v) r = std::max(r, std::abs(z));
  return r;
}

inline double max_abs(const Rank2c& t) {
  double r = 0.0;
  for (const auto& row : t)
    for (const auto& z : row) r = std::max(r, std::abs(z));
  return r;
}

inline double max_abs(const Rank2d& t) {
  double r = 0.0;
  for (const auto& row : t)
    for (const auto& z : row) r = std::max(r, std::abs(z));
  return r;
}

}  // namespace mdstress
