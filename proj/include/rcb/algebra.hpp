// Resultants, division and gcd for Bernstein-form polynomials.
#pragma once

#include "rcb/bernstein.hpp"
#include "rcb/linalg.hpp"

#include <optional>
#include <utility>

namespace rcb {

/// Monomial coefficients c_k of p(t) = sum_k c_k t^k, lowest power first.
template <typename Scalar>
ComplexVector<Scalar> to_monomial(const BPoly<Scalar>& p) {
  const int n = p.degree();
  const auto reduced = to_reduced(p);
  ComplexVector<Scalar> c = ComplexVector<Scalar>::Zero(n + 1);
  // t^j (1-t)^(n-j) = sum_i (-1)^i C(n-j, i) t^(j+i)
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n - j; ++i) {
      const Scalar sign = (i % 2 == 0) ? Scalar(1) : Scalar(-1);
      c(j + i) += sign * Scalar(binomial(n - j, i)) * reduced[j];
    }
  return c;
}

/// Sylvester matrix: n shifted rows of `a`, then m shifted rows of `b`.
template <typename Scalar>
ComplexMatrix<Scalar> sylvester_matrix(const ComplexVector<Scalar>& a,
                                       const ComplexVector<Scalar>& b) {
  const Eigen::Index m = a.size() - 1;
  const Eigen::Index n = b.size() - 1;
  ComplexMatrix<Scalar> s = ComplexMatrix<Scalar>::Zero(m + n, m + n);
  for (Eigen::Index row = 0; row < n; ++row) s.row(row).segment(row, m + 1) = a.transpose();
  for (Eigen::Index row = 0; row < m; ++row) s.row(n + row).segment(row, n + 1) = b.transpose();
  return s;
}

namespace detail {
template <typename Scalar>
void require_positive_degrees(const BPoly<Scalar>& p, const BPoly<Scalar>& q) {
  if (p.degree() < 1 || q.degree() < 1) throw Error("resultant requires positive degrees");
}
}  // namespace detail

/// Classical resultant from monomial coefficients, highest power first in each row.
template <typename Scalar>
Complex<Scalar> resultant_monomial(const BPoly<Scalar>& p, const BPoly<Scalar>& q) {
  detail::require_positive_degrees(p, q);
  const ComplexVector<Scalar> a = to_monomial(p).reverse();
  const ComplexVector<Scalar> b = to_monomial(q).reverse();
  return lu_determinant(sylvester_matrix<Scalar>(a, b));
}

/// Resultant from reduced Bernstein coefficients. The reduced Sylvester
/// determinant equals the monomial resultant up to the sign (-1)^(mn).
/// Degrees are formal (coefficient list lengths).
template <typename Scalar>
Complex<Scalar> resultant_bernstein(const BPoly<Scalar>& p, const BPoly<Scalar>& q) {
  detail::require_positive_degrees(p, q);
  const Complex<Scalar> det =
      lu_determinant(sylvester_matrix<Scalar>(to_reduced(p).values(), to_reduced(q).values()));
  return (p.degree() * q.degree()) % 2 == 0 ? det : -det;
}

template <typename Scalar>
struct CoprimalityTest {
  Complex<Scalar> resultant;
  Scalar scale;  ///< (max|a~|)^n (max|b~|)^m
  bool coprime;
};

template <typename Scalar>
CoprimalityTest<Scalar> test_coprime(const BPoly<Scalar>& p, const BPoly<Scalar>& q,
                                     const Tolerances& tol = {}) {
  const Complex<Scalar> res = resultant_bernstein(p, q);
  const Scalar scale = std::pow(max_modulus(to_reduced(p).values()), q.degree()) *
                       std::pow(max_modulus(to_reduced(q).values()), p.degree());
  return {res, scale, std::abs(res) > Scalar(tol.res) * scale};
}

template <typename Scalar>
bool is_coprime(const BPoly<Scalar>& p, const BPoly<Scalar>& q, const Tolerances& tol = {}) {
  return test_coprime(p, q, tol).coprime;
}

template <typename Scalar>
struct Division {
  BPoly<Scalar> quotient;                  ///< degree m - n
  std::optional<BPoly<Scalar>> remainder;  ///< degree n - 1; empty for a constant divisor
};

/// p = q f + (1-t)^(m-n+1) r. Requires q(1) != 0; p(1) may vanish.
///
/// In reduced coordinates the top m-n+1 entries of p~ - q~ * f~ must vanish,
/// which is a triangular system solved from the t = 1 end. The leading n
/// entries that remain are r~.
template <typename Scalar>
Division<Scalar> divide(const BPoly<Scalar>& p, const BPoly<Scalar>& q,
                        const Tolerances& tol = {}) {
  const int m = p.degree();
  const int n = q.degree();
  if (m < n) throw Error("dividend degree must be at least the divisor degree");
  const auto qr = to_reduced(q);
  const auto& b = qr.values();
  const Scalar qmax = max_modulus(b);
  if (qmax == Scalar(0)) throw Error("division by zero polynomial");
  if (std::abs(b(n)) <= Scalar(tol.zero) * qmax)
    throw Error("divisor vanishes at t=1, extract factors first");

  ComplexVector<Scalar> rest = to_reduced(p).values();
  const int k = m - n;
  ComplexVector<Scalar> f(k + 1);
  for (int i = k; i >= 0; --i) {
    f(i) = rest(i + n) / b(n);
    rest.segment(i, n + 1) -= f(i) * b;
    rest(i + n) = Complex<Scalar>(0);
  }

  Division<Scalar> out{from_reduced(ReducedCoeffs<Scalar>(std::move(f))), std::nullopt};
  if (n > 0) out.remainder = from_reduced(ReducedCoeffs<Scalar>(rest.head(n)));
  return out;
}

namespace detail {

template <typename Scalar>
BPoly<Scalar> unit_scaled(const BPoly<Scalar>& p) {
  const auto r = to_reduced(p).values();
  return from_reduced(ReducedCoeffs<Scalar>(r / r(argmax_modulus(r))));
}

/// p(1-t).
template <typename Scalar>
BPoly<Scalar> mirrored(const BPoly<Scalar>& p) {
  return BPoly<Scalar>(ComplexVector<Scalar>(p.coeffs().reverse()));
}

/// Euclid remainder of a by b, dividing from the end where b is larger.
template <typename Scalar>
BPoly<Scalar> euclid_remainder(const BPoly<Scalar>& a, const BPoly<Scalar>& b, const Tolerances& tol) {
  const auto& c = b.coeffs();
  if (std::abs(c(0)) > std::abs(c(b.degree())))
    return mirrored(*divide(mirrored(a), mirrored(b), tol).remainder);
  return *divide(a, b, tol).remainder;
}

}  // namespace detail

/// Greatest common divisor by Euclid's algorithm on Bernstein-form division.
///
/// Common powers of t and (1-t) are split off first and multiplied back into
/// the result. Each step divides from whichever end the divisor is larger at. Every operand is kept with unit max reduced modulus, so a
/// remainder is zero when its max reduced modulus is below tol.gcd. The result
/// is scaled so its largest-modulus reduced coefficient equals 1.
template <typename Scalar>
BPoly<Scalar> gcd(const BPoly<Scalar>& p, const BPoly<Scalar>& q, const Tolerances& tol = {}) {
  const bool p_zero = max_modulus(p.coeffs()) == Scalar(0);
  const bool q_zero = max_modulus(q.coeffs()) == Scalar(0);
  if (p_zero && q_zero) throw Error("gcd of two zero polynomials");
  if (p_zero) return detail::unit_scaled(q);
  if (q_zero) return detail::unit_scaled(p);

  const auto fp = extract_factors(p, tol);
  const auto fq = extract_factors(q, tol);
  const int common_one_minus_t = std::min(fp.one_minus_t_power, fq.one_minus_t_power);
  const int common_t = std::min(fp.t_power, fq.t_power);

  BPoly<Scalar> a = detail::unit_scaled(fp.core);
  BPoly<Scalar> b = detail::unit_scaled(fq.core);
  if (a.degree() < b.degree()) std::swap(a, b);

  while (b.degree() > 0) {
    const BPoly<Scalar> r = detail::euclid_remainder(a, b, tol);
    if (max_modulus(to_reduced(r).values()) <= Scalar(tol.gcd)) break;
    // b(0), b(1) != 0, so powers of t or (1-t) in r are never common factors.
    a = std::move(b);
    b = detail::unit_scaled(extract_factors(r, tol).core);
  }
  return detail::unit_scaled(shift_factors(b, common_one_minus_t, common_t));
}

}  // namespace rcb
