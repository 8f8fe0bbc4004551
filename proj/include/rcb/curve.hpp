// Rational complex Bezier curves
//
//          sum_j w_j z_j B^n_j(t)
//   c(t) = ----------------------
//            sum_j w_j B^n_j(t)
//
// with complex control points z_j and complex weights w_j, and the
// operations that act on them: Mobius images, reparametrisation, degree
// elevation, reducibility tests, gcd-based reduction and conversion to and
// from real rational Bezier curves.
#pragma once

#include "rcb/algebra.hpp"

#include <numbers>
#include <string>
#include <utility>

namespace rcb {

template <typename Scalar>
class CxBezier {
 public:
  using ComplexScalar = Complex<Scalar>;
  using Points = ComplexVector<Scalar>;

  CxBezier(Points polygon, Points weights, const Tolerances& tol = {})
      : polygon_(std::move(polygon)), weights_(std::move(weights)) {
    if (polygon_.size() != weights_.size())
      throw Error("control polygon and weights differ in length");
    if (polygon_.size() < 2) throw Error("a curve needs at least two control points");
    if (degree() > kMaxDegree) throw Error("degree exceeds the supported maximum of 60");
    if (!all_finite(polygon_) || !all_finite(weights_))
      throw Error("control data must be finite");
    const Scalar wmax = max_modulus(weights_);
    for (Eigen::Index j = 0; j < weights_.size(); ++j)
      if (std::abs(weights_(j)) <= Scalar(tol.zero) * wmax)
        throw Error("weight " + std::to_string(j) + " vanishes");
  }

  /// Curve p(t)/q(t) from numerator and denominator of equal degree.
  static CxBezier from_homogeneous(const BPoly<Scalar>& numerator,
                                   const BPoly<Scalar>& denominator,
                                   const Tolerances& tol = {}) {
    if (numerator.degree() != denominator.degree())
      throw Error("numerator and denominator degrees differ");
    const Points& w = denominator.coeffs();
    const Scalar wmax = max_modulus(w);
    for (Eigen::Index j = 0; j < w.size(); ++j)
      if (std::abs(w(j)) <= Scalar(tol.zero) * wmax)
        throw Error("weight " + std::to_string(j) + " vanishes");
    return CxBezier(numerator.coeffs().cwiseQuotient(w), w, tol);
  }

  int degree() const { return int(polygon_.size()) - 1; }
  const Points& polygon() const { return polygon_; }
  const Points& weights() const { return weights_; }

  BPoly<Scalar> numerator() const { return BPoly<Scalar>(weights_.cwiseProduct(polygon_)); }
  BPoly<Scalar> denominator() const { return BPoly<Scalar>(weights_); }

 private:
  Points polygon_;
  Points weights_;
};

using CxBezierd = CxBezier<double>;

template <typename Scalar>
class RealBezier {
 public:
  using Points = Eigen::Matrix<Scalar, Eigen::Dynamic, 2>;
  using Weights = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  RealBezier(Points points, Weights weights) : points_(std::move(points)), weights_(std::move(weights)) {
    if (points_.rows() != weights_.size()) throw Error("control points and weights differ in length");
    if (points_.rows() < 2) throw Error("a curve needs at least two control points");
    if (!points_.allFinite() || !weights_.allFinite()) throw Error("control data must be finite");
    for (Eigen::Index j = 0; j < weights_.size(); ++j)
      if (weights_(j) == Scalar(0)) throw Error("weight " + std::to_string(j) + " vanishes");
  }

  int degree() const { return int(points_.rows()) - 1; }
  const Points& points() const { return points_; }
  const Weights& weights() const { return weights_; }

 private:
  Points points_;
  Weights weights_;
};

using RealBezierd = RealBezier<double>;

/// f(z) = (c + d z) / (a + b z), acting linearly on (w, w z) as
/// (w, w z) -> (a w + b w z, c w + d w z).
template <typename Scalar>
class MobiusMap {
 public:
  using ComplexScalar = Complex<Scalar>;

  MobiusMap(ComplexScalar a, ComplexScalar b, ComplexScalar c, ComplexScalar d,
            const Tolerances& tol = {})
      : a_(a), b_(b), c_(c), d_(d) {
    if (!is_finite(a) || !is_finite(b) || !is_finite(c) || !is_finite(d))
      throw Error("Mobius coefficients must be finite");
    const Scalar scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    if (std::abs(a * d - b * c) <= Scalar(tol.zero) * scale * scale)
      throw Error("singular Mobius map: ad - bc vanishes");
  }

  static MobiusMap identity() { return {1, 0, 0, 1}; }
  static MobiusMap inversion() { return {0, 1, 1, 0}; }

  ComplexScalar operator()(const ComplexScalar& z) const { return (c_ + d_ * z) / (a_ + b_ * z); }

  const ComplexScalar& a() const { return a_; }
  const ComplexScalar& b() const { return b_; }
  const ComplexScalar& c() const { return c_; }
  const ComplexScalar& d() const { return d_; }

 private:
  ComplexScalar a_, b_, c_, d_;
};

template <typename Scalar>
struct CircleArc {
  CxBezier<Scalar> curve;
  Scalar radius;
  Complex<Scalar> center;
};

/// Raised when a control point is sent to infinity by a Mobius map.
class MobiusPoleError : public Error {
 public:
  explicit MobiusPoleError(int index)
      : Error("control point at pole of Mobius map (index " + std::to_string(index) + ")"),
        index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

template <typename Scalar>
Complex<Scalar> eval(const CxBezier<Scalar>& curve, Scalar t, const Tolerances& tol = {}) {
  const auto den = curve.denominator();
  const Complex<Scalar> q = eval(den, t);
  if (std::abs(q) <= Scalar(tol.pole) * max_modulus(to_reduced(den).values()))
    throw PoleError(double(t));
  return eval(curve.numerator(), t) / q;
}

template <typename Scalar>
struct EndpointTangents {
  Complex<Scalar> start;
  Complex<Scalar> end;
};

template <typename Scalar>
EndpointTangents<Scalar> endpoint_tangents(const CxBezier<Scalar>& curve) {
  const int n = curve.degree();
  const auto& z = curve.polygon();
  const auto& w = curve.weights();
  return {Scalar(n) * w(1) / w(0) * (z(1) - z(0)),
          Scalar(n) * w(n - 1) / w(n) * (z(n) - z(n - 1))};
}

template <typename Scalar>
CxBezier<Scalar> scale_weights(const CxBezier<Scalar>& curve, const Complex<Scalar>& lambda) {
  if (lambda == Complex<Scalar>(0) || !is_finite(lambda))
    throw Error("weight scale factor must be finite and nonzero");
  return CxBezier<Scalar>(curve.polygon(), curve.weights() * lambda);
}

/// Divides all weights by the weight of largest modulus (lowest index on ties).
template <typename Scalar>
CxBezier<Scalar> normalize_weights(const CxBezier<Scalar>& curve) {
  const auto& w = curve.weights();
  return CxBezier<Scalar>(curve.polygon(), w / w(argmax_modulus(w)));
}

/// Parameter change t = u / ((1 - rho) u + rho), which maps [0,1] onto itself
/// for rho > 0. The polygon is unchanged and w_j becomes rho^(n-j) w_j.
template <typename Scalar>
CxBezier<Scalar> reparametrize(const CxBezier<Scalar>& curve, Scalar rho) {
  if (!(rho > Scalar(0)) || !std::isfinite(rho))
    throw Error("reparametrisation parameter must be positive");
  const int n = curve.degree();
  ComplexVector<Scalar> w = curve.weights();
  for (int j = 0; j <= n; ++j) w(j) *= std::pow(rho, n - j);
  return CxBezier<Scalar>(curve.polygon(), std::move(w));
}

template <typename Scalar>
CxBezier<Scalar> mobius_image(const CxBezier<Scalar>& curve, const MobiusMap<Scalar>& map,
                              const Tolerances& tol = {}) {
  const auto& z = curve.polygon();
  const auto& w = curve.weights();
  const Eigen::Index size = z.size();
  ComplexVector<Scalar> new_w(size), new_wz(size);
  for (Eigen::Index j = 0; j < size; ++j) {
    new_w(j) = w(j) * (map.a() + map.b() * z(j));
    new_wz(j) = w(j) * (map.c() + map.d() * z(j));
  }
  const Scalar wmax = max_modulus(new_w);
  for (Eigen::Index j = 0; j < size; ++j)
    if (std::abs(new_w(j)) <= Scalar(tol.zero) * wmax) throw MobiusPoleError(int(j));
  ComplexVector<Scalar> new_z = new_wz.cwiseQuotient(new_w);
  return CxBezier<Scalar>(std::move(new_z), std::move(new_w), tol);
}

/// Image under z -> 1/z: polygon {1/z_j}, weights {w_j z_j}.
template <typename Scalar>
CxBezier<Scalar> invert(const CxBezier<Scalar>& curve, const Tolerances& tol = {}) {
  return mobius_image(curve, MobiusMap<Scalar>::inversion(), tol);
}

/// Multiplies numerator and denominator by alpha (1-t) + beta t.
/// Roots of that factor inside [0,1] are allowed; only vanishing weights are rejected.
template <typename Scalar>
CxBezier<Scalar> degree_elevate(const CxBezier<Scalar>& curve, const Complex<Scalar>& alpha,
                                const Complex<Scalar>& beta, const Tolerances& tol = {}) {
  if (alpha == Complex<Scalar>(0) && beta == Complex<Scalar>(0))
    throw Error("elevation factor must be nonzero");
  const auto factor = BPoly<Scalar>{alpha, beta};
  const auto w = multiply(curve.denominator(), factor).coeffs();
  const auto wz = multiply(curve.numerator(), factor).coeffs();
  const Scalar wmax = max_modulus(w);
  for (Eigen::Index j = 0; j < w.size(); ++j)
    if (std::abs(w(j)) <= Scalar(tol.zero) * wmax)
      throw Error("elevation factor has root coincident with weight structure");
  return CxBezier<Scalar>(wz.cwiseQuotient(w), w, tol);
}

template <typename Scalar>
CoprimalityTest<Scalar> irreducibility_test(const CxBezier<Scalar>& curve,
                                            const Tolerances& tol = {}) {
  return test_coprime(curve.numerator(), curve.denominator(), tol);
}

template <typename Scalar>
bool is_irreducible(const CxBezier<Scalar>& curve, const Tolerances& tol = {}) {
  return irreducibility_test(curve, tol).coprime;
}

/// A rational cubic is a conic arc exactly when its parametrisation is reducible.
template <typename Scalar>
bool is_conic_cubic(const CxBezier<Scalar>& curve, const Tolerances& tol = {}) {
  if (curve.degree() != 3) throw Error("conic test requires a cubic");
  return !is_irreducible(curve, tol);
}

/// Cancels gcd(numerator, denominator). The result has normalized weights.
template <typename Scalar>
CxBezier<Scalar> reduce(const CxBezier<Scalar>& curve, const Tolerances& tol = {}) {
  const auto p = curve.numerator();
  const auto q = curve.denominator();
  const auto g = gcd(p, q, tol);
  if (g.degree() == 0) return normalize_weights(curve);
  // q(0) = w_0 and q(1) = w_n are nonzero, so g(1) != 0 and division applies.
  const auto new_q = divide(q, g, tol).quotient;
  const auto new_p = divide(p, g, tol).quotient;
  const auto& w = new_q.coeffs();
  const Scalar wmax = max_modulus(w);
  for (Eigen::Index j = 0; j < w.size(); ++j)
    if (std::abs(w(j)) <= Scalar(tol.zero) * wmax)
      throw Error("base point / infinite control point after reduction");
  return normalize_weights(CxBezier<Scalar>(new_p.coeffs().cwiseQuotient(w), w, tol));
}

template <typename Scalar>
CxBezier<Scalar> from_real(const RealBezier<Scalar>& curve) {
  const auto& pts = curve.points();
  ComplexVector<Scalar> z(pts.rows());
  for (Eigen::Index j = 0; j < pts.rows(); ++j) z(j) = Complex<Scalar>(pts(j, 0), pts(j, 1));
  return CxBezier<Scalar>(std::move(z), curve.weights().template cast<Complex<Scalar>>());
}

/// Real form of degree 2n obtained by multiplying numerator and denominator
/// by the conjugate of the denominator.
template <typename Scalar>
RealBezier<Scalar> to_real(const CxBezier<Scalar>& curve, const Tolerances& tol = {}) {
  const ComplexVector<Scalar> w = to_reduced(curve.denominator()).values();
  const ComplexVector<Scalar> wz = to_reduced(curve.numerator()).values();
  const ComplexVector<Scalar> w_conj = w.conjugate();
  const Eigen::Index n = w.size() - 1;

  // Pairs (j,k) and (k,j) contribute conjugate terms; summing them together
  // keeps the denominator real up to rounding of the pair sums.
  ComplexVector<Scalar> den = ComplexVector<Scalar>::Zero(2 * n + 1);
  for (Eigen::Index j = 0; j <= n; ++j)
    for (Eigen::Index k = j; k <= n; ++k)
      den(j + k) += (j == k) ? w(j) * w_conj(k) : w(j) * w_conj(k) + w(k) * w_conj(j);
  const ComplexVector<Scalar> num = convolve<Scalar>(wz, w_conj);

  const int degree = int(2 * n);
  const Scalar den_max = max_modulus(den);
  typename RealBezier<Scalar>::Points points(degree + 1, 2);
  typename RealBezier<Scalar>::Weights weights(degree + 1);
  for (int i = 0; i <= degree; ++i) {
    if (std::abs(den(i).imag()) > Scalar(1e-12) * den_max)
      throw Error("conjugate product has a non-real weight");
    const Scalar reduced_weight = den(i).real();
    if (std::abs(reduced_weight) <= Scalar(tol.zero) * den_max)
      throw Error("real weight " + std::to_string(i) + " vanishes (base point of conjugate form)");
    const Complex<Scalar> point = num(i) / reduced_weight;
    points(i, 0) = point.real();
    points(i, 1) = point.imag();
    weights(i) = reduced_weight / Scalar(binomial(degree, i));
  }
  return RealBezier<Scalar>(std::move(points), std::move(weights));
}

/// Degree-one arc from z0 to z1 with weights {1, e^{i alpha}}.
template <typename Scalar>
CircleArc<Scalar> circle_arc(const Complex<Scalar>& z0, const Complex<Scalar>& z1, Scalar alpha,
                             const Tolerances& tol = {}) {
  if (!is_finite(z0) || !is_finite(z1) || !std::isfinite(alpha))
    throw Error("circle arc data must be finite");
  if (z0 == z1) throw Error("circle arc endpoints coincide");
  const Scalar sin_alpha = std::sin(alpha);
  if (std::abs(sin_alpha) <= Scalar(tol.zero)) throw Error("degenerate: segment or line, not an arc");
  const Complex<Scalar> rotation = std::polar(Scalar(1), alpha);
  const Complex<Scalar> i(0, 1);
  ComplexVector<Scalar> polygon(2), weights(2);
  polygon << z0, z1;
  weights << Complex<Scalar>(1), rotation;
  return {CxBezier<Scalar>(std::move(polygon), std::move(weights), tol),
          std::abs(z1 - z0) / (Scalar(2) * std::abs(sin_alpha)),
          z0 + i * rotation / (Scalar(2) * sin_alpha) * (z0 - z1)};
}

/// 33 Chebyshev-distributed parameters in [0,1].
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> chebyshev_samples(int count = 33) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> t(count);
  for (int k = 0; k < count; ++k)
    t(k) = (Scalar(1) - std::cos((2 * k + 1) * std::numbers::pi_v<Scalar> / (2 * count))) / 2;
  return t;
}

/// Extensional curve equality: equal degree after reduction and pointwise
/// agreement at Chebyshev samples (relative tolerance `rel`).
template <typename Scalar>
bool equivalent(const CxBezier<Scalar>& lhs, const CxBezier<Scalar>& rhs, Scalar rel = Scalar(1e-9),
                const Tolerances& tol = {}) {
  if (reduce(lhs, tol).degree() != reduce(rhs, tol).degree()) return false;
  for (Scalar t : chebyshev_samples<Scalar>()) {
    Complex<Scalar> a, b;
    bool a_pole = false, b_pole = false;
    try { a = eval(lhs, t, tol); } catch (const PoleError&) { a_pole = true; }
    try { b = eval(rhs, t, tol); } catch (const PoleError&) { b_pole = true; }
    if (a_pole != b_pole) return false;
    if (!a_pole && std::abs(a - b) > rel * (Scalar(1) + std::abs(a))) return false;
  }
  return true;
}

}  // namespace rcb
