// Shared scalar types, tolerances and errors for rational complex Bezier curves.
#pragma once

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rcb {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using ComplexVector = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

using Cx = Complex<double>;

/// Highest polynomial degree handled anywhere in the library.
inline constexpr int kMaxDegree = 60;

/// Numerical thresholds. Every test is relative to a scale stated next to the field.
struct Tolerances {
  double zero = 1e-10;  ///< coefficient vs. max coefficient modulus of its polynomial
  double res = 1e-8;    ///< resultant modulus vs. (max|a~|)^n (max|b~|)^m
  double gcd = 1e-9;    ///< Euclid remainder vs. unit-scaled dividend
  double pole = 1e-12;  ///< curve denominator vs. max reduced weight modulus
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Denominator of a rational curve vanished at parameter `t`.
class PoleError : public Error {
 public:
  explicit PoleError(double t)
      : Error("pole: curve denominator vanishes at t=" + std::to_string(t)), t_(t) {}
  double t() const noexcept { return t_; }

 private:
  double t_;
};

namespace detail {

consteval auto pascal_triangle() {
  std::array<std::array<std::uint64_t, kMaxDegree + 1>, kMaxDegree + 1> table{};
  for (int n = 0; n <= kMaxDegree; ++n) {
    table[n][0] = table[n][n] = 1;
    for (int k = 1; k < n; ++k) table[n][k] = table[n - 1][k - 1] + table[n - 1][k];
  }
  return table;
}

inline constexpr auto kBinomials = pascal_triangle();

}  // namespace detail

/// Exact binomial coefficient C(n, k) for 0 <= n <= 60.
inline std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > kMaxDegree) throw Error("degree exceeds the supported maximum of 60");
  if (k < 0 || k > n) return 0;
  return detail::kBinomials[n][k];
}

template <typename Scalar>
bool is_finite(const Complex<Scalar>& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_finite(v(i))) return false;
  return true;
}

/// Largest entry modulus, 0 for an empty vector.
template <typename Derived>
auto max_modulus(const Eigen::MatrixBase<Derived>& v) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  Real m{0};
  for (Eigen::Index i = 0; i < v.size(); ++i) m = std::max<Real>(m, std::abs(v(i)));
  return m;
}

/// Index of the entry of largest modulus; ties resolve to the lowest index.
template <typename Derived>
Eigen::Index argmax_modulus(const Eigen::MatrixBase<Derived>& v) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i)
    if (std::abs(v(i)) > std::abs(v(best))) best = i;
  return best;
}

}  // namespace rcb
