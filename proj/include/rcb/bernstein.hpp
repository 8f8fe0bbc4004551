// Univariate polynomials in the Bernstein basis with complex coefficients.
//
// A degree-n polynomial p(t) = sum_j a_j B^n_j(t) is stored as its n+1
// Bernstein coefficients. The "reduced" coefficients a_j * C(n, j) turn the
// product of two polynomials into a plain convolution and turn multiplication
// by powers of t and (1-t) into zero padding.
#pragma once

#include "rcb/core.hpp"

#include <initializer_list>
#include <utility>

namespace rcb {

template <typename Scalar>
class BPoly {
 public:
  using RealScalar = Scalar;
  using ComplexScalar = Complex<Scalar>;
  using Coeffs = ComplexVector<Scalar>;

  explicit BPoly(Coeffs coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 1) throw Error("polynomial needs at least one coefficient");
    if (degree() > kMaxDegree) throw Error("degree exceeds the supported maximum of 60");
    if (!all_finite(coeffs_)) throw Error("polynomial coefficients must be finite");
  }
  BPoly(std::initializer_list<ComplexScalar> coeffs)
      : BPoly(Coeffs(Eigen::Map<const Coeffs>(coeffs.begin(), Eigen::Index(coeffs.size())))) {}

  static BPoly constant(const ComplexScalar& c) { return BPoly(Coeffs::Constant(1, c)); }

  int degree() const { return int(coeffs_.size()) - 1; }
  const Coeffs& coeffs() const { return coeffs_; }
  const ComplexScalar& operator[](Eigen::Index j) const { return coeffs_(j); }

 private:
  Coeffs coeffs_;
};

using BPolyd = BPoly<double>;

/// Bernstein coefficients scaled by their binomials. Entry j is a_j * C(n, j).
template <typename Scalar>
class ReducedCoeffs {
 public:
  using Coeffs = ComplexVector<Scalar>;

  explicit ReducedCoeffs(Coeffs values) : values_(std::move(values)) {
    if (values_.size() < 1) throw Error("reduced coefficient list is empty");
    if (degree() > kMaxDegree) throw Error("degree exceeds the supported maximum of 60");
  }
  ReducedCoeffs(std::initializer_list<Complex<Scalar>> values)
      : ReducedCoeffs(
            Coeffs(Eigen::Map<const Coeffs>(values.begin(), Eigen::Index(values.size())))) {}

  int degree() const { return int(values_.size()) - 1; }
  const Coeffs& values() const { return values_; }
  const Complex<Scalar>& operator[](Eigen::Index j) const { return values_(j); }

 private:
  Coeffs values_;
};

/// de Casteljau evaluation; t outside [0,1] extrapolates.
template <typename Scalar>
Complex<Scalar> eval(const BPoly<Scalar>& p, Scalar t) {
  ComplexVector<Scalar> work = p.coeffs();
  const Scalar s = Scalar(1) - t;
  for (int level = p.degree(); level > 0; --level)
    for (int j = 0; j < level; ++j) work(j) = s * work(j) + t * work(j + 1);
  return work(0);
}

template <typename Scalar>
ReducedCoeffs<Scalar> to_reduced(const BPoly<Scalar>& p) {
  const int n = p.degree();
  ComplexVector<Scalar> r(n + 1);
  for (int j = 0; j <= n; ++j) r(j) = p[j] * Scalar(binomial(n, j));
  return ReducedCoeffs<Scalar>(std::move(r));
}

template <typename Scalar>
BPoly<Scalar> from_reduced(const ReducedCoeffs<Scalar>& r) {
  const int n = r.degree();
  ComplexVector<Scalar> a(n + 1);
  for (int j = 0; j <= n; ++j) a(j) = r[j] / Scalar(binomial(n, j));
  return BPoly<Scalar>(std::move(a));
}

/// Full convolution of two coefficient lists.
template <typename Scalar>
ComplexVector<Scalar> convolve(const ComplexVector<Scalar>& a, const ComplexVector<Scalar>& b) {
  ComplexVector<Scalar> c = ComplexVector<Scalar>::Zero(a.size() + b.size() - 1);
  for (Eigen::Index j = 0; j < a.size(); ++j)
    for (Eigen::Index k = 0; k < b.size(); ++k) c(j + k) += a(j) * b(k);
  return c;
}

template <typename Scalar>
BPoly<Scalar> multiply(const BPoly<Scalar>& p, const BPoly<Scalar>& q) {
  if (p.degree() + q.degree() > kMaxDegree)
    throw Error("product degree exceeds the supported maximum of 60");
  return from_reduced(ReducedCoeffs<Scalar>(
      convolve<Scalar>(to_reduced(p).values(), to_reduced(q).values())));
}

/// (1-t)^one_minus_t_power * p(t) * t^t_power, as a degree n+J+K polynomial.
template <typename Scalar>
BPoly<Scalar> shift_factors(const BPoly<Scalar>& p, int one_minus_t_power, int t_power) {
  if (one_minus_t_power < 0 || t_power < 0) throw Error("factor powers must be non-negative");
  const int n = p.degree();
  if (n + one_minus_t_power + t_power > kMaxDegree)
    throw Error("degree exceeds the supported maximum of 60");
  ComplexVector<Scalar> r = ComplexVector<Scalar>::Zero(n + 1 + one_minus_t_power + t_power);
  r.segment(t_power, n + 1) = to_reduced(p).values();
  return from_reduced(ReducedCoeffs<Scalar>(std::move(r)));
}

template <typename Scalar>
struct Factored {
  int one_minus_t_power;  ///< trailing zero reduced coefficients stripped
  int t_power;            ///< leading zero reduced coefficients stripped
  BPoly<Scalar> core;     ///< nonzero value at both t = 0 and t = 1
};

/// Splits p = (1-t)^J * core * t^K. Zero test is relative to the max reduced modulus.
template <typename Scalar>
Factored<Scalar> extract_factors(const BPoly<Scalar>& p, const Tolerances& tol = {}) {
  const auto reduced = to_reduced(p);
  const auto& r = reduced.values();
  const Scalar threshold = Scalar(tol.zero) * max_modulus(r);
  const auto is_zero = [&](Eigen::Index j) { return std::abs(r(j)) <= threshold; };
  if (max_modulus(r) == Scalar(0)) throw Error("zero polynomial");

  Eigen::Index first = 0;
  while (is_zero(first)) ++first;
  Eigen::Index last = r.size() - 1;
  while (is_zero(last)) --last;

  ComplexVector<Scalar> core = r.segment(first, last - first + 1);
  return {int(r.size() - 1 - last), int(first),
          from_reduced(ReducedCoeffs<Scalar>(std::move(core)))};
}

}  // namespace rcb
