// Classical curves obtained by inverting conic arcs in the unit circle (z -> 1/z).
#pragma once

#include "rcb/curve.hpp"

#include <numbers>

namespace rcb {

template <typename Scalar>
struct InversionPair {
  CxBezier<Scalar> conic;
  CxBezier<Scalar> inverted;
};

namespace detail {

template <typename Scalar>
InversionPair<Scalar> inversion_pair(ComplexVector<Scalar> polygon, ComplexVector<Scalar> weights,
                                     Scalar shrink) {
  CxBezier<Scalar> conic(polygon / shrink, std::move(weights));
  return {conic, invert(conic)};
}

template <typename Scalar>
void require_nonzero(Scalar a) {
  if (a == Scalar(0) || !std::isfinite(a)) throw Error("gallery parameter a must be finite and nonzero");
}

}  // namespace detail

/// Cissoid of Diocles 2a s^2 / (s + i) as the inverse of the parabola
/// y = 2a x^2 about its vertex. For a = 1/2 the parabola arc runs over
/// x = 2t - 1 in [-1, 1], i.e. s = 1 / (2t - 1); the vertex sits at t = 1/2,
/// where the cissoid goes to infinity. The cissoid is linear in a, so the
/// parabola data are divided by 2a.
template <typename Scalar>
InversionPair<Scalar> cissoid(Scalar a) {
  detail::require_nonzero(a);
  using C = Complex<Scalar>;
  ComplexVector<Scalar> polygon(3), weights(3);
  polygon << C(-1, 1), C(0, -1), C(1, 1);
  weights << C(1), C(1), C(1);
  return detail::inversion_pair<Scalar>(polygon, weights, 2 * a);
}

/// Cardioid -2a / (s + i)^2 as the inverse of the parabola x = (1 - a^2 y^2) / 2a
/// about its focus (the origin). For a = 1 the parabola arc has y = 2t - 1,
/// i.e. s = 1 - 2t. Parabola data scale by 1/a.
template <typename Scalar>
InversionPair<Scalar> cardioid(Scalar a) {
  detail::require_nonzero(a);
  using C = Complex<Scalar>;
  ComplexVector<Scalar> polygon(3), weights(3);
  polygon << C(0, -1), C(1), C(0, 1);
  weights << C(1), C(1), C(1);
  return detail::inversion_pair<Scalar>(polygon, weights, a);
}

/// Lemniscate of Bernoulli a (1 - i) s / (s^2 - i) as the inverse of the
/// equilateral hyperbola x^2 - y^2 = 1/a^2 about its center. For a = 1 the
/// hyperbola point is (s + 1/s)/2 + i (s - 1/s)/2 with
/// s = (sqrt2 - 1) ((1 - t) + (sqrt2 + 1) t) / ((1 - t) + (sqrt2 - 1) t),
/// so t in [0,1] covers s in [sqrt2 - 1, sqrt2 + 1]. Hyperbola data scale by 1/a.
template <typename Scalar>
InversionPair<Scalar> lemniscate(Scalar a) {
  detail::require_nonzero(a);
  using C = Complex<Scalar>;
  const Scalar sqrt2 = std::numbers::sqrt2_v<Scalar>;
  ComplexVector<Scalar> polygon(3), weights(3);
  polygon << C(sqrt2, -1), C(sqrt2 / 2), C(sqrt2, 1);
  weights << C(1), C(sqrt2), C(1);
  return detail::inversion_pair<Scalar>(polygon, weights, a);
}

}  // namespace rcb
