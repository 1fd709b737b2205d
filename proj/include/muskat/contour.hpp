#pragma once

#include "muskat/grid.hpp"

namespace muskat {

/// The curve {x + i*sign*h(x)} bounding a strip-like region of the torus.
struct LiftedContour {
  RealVector h;
  RealVector h_prime;
  RealVector h_second;
  int sign = +1;

  /// Builds a contour from node heights; derivatives are taken spectrally.
  static LiftedContour from_heights(const SpectralGrid& grid, const RealVector& heights, int sign = +1);
  /// Same, with a caller-supplied h'. Throws InvalidContour if it disagrees
  /// with the spectral derivative by more than 1e-8.
  static LiftedContour from_heights(const SpectralGrid& grid, const RealVector& heights, const RealVector& slope,
                                    int sign);
  static LiftedContour constant(const SpectralGrid& grid, double height, int sign = +1);

  /// The reflected contour x - i*sign*h(x).
  LiftedContour mirrored() const;

  ComplexVector points(const SpectralGrid& grid) const;
  /// dw/du along the parametrization: 1 + i*sign*h'.
  ComplexVector tangent() const;
  /// d^2w/du^2: i*sign*h''.
  ComplexVector tangent_derivative() const;
};

/// Contour analogue of the half-Laplacian:
///   -(1/pi) int_Gamma (1/2) cot((z - w)/2) (F'(z) - F'(w)) dw
/// by the trapezoid rule in the parameter. The removable diagonal takes its
/// limit d/du[F'(w(u))], obtained spectrally from the F' samples.
ComplexVector lambda_gamma(const SpectralGrid& grid, const ComplexVector& f_samples, const ComplexVector& f_prime_samples,
                           const LiftedContour& contour);

/// PV int_Gamma cot((z - w)/2) dw at every contour node, computed in the
/// subtracted form int [cot((z-w)/2) w'(u) - cot((x-u)/2)] du whose diagonal
/// limit is -w''(x)/w'(x).
ComplexVector pv_cot_integral(const SpectralGrid& grid, const LiftedContour& contour);

/// Same integral on the real torus; the diagonal node takes the value 0.
ComplexVector pv_cot_integral(const SpectralGrid& grid);

/// Re <(a Lambda + b D) f, f> with D = (1/i) d/dx.
double garding_form(const SpectralGrid& grid, const RealVector& a, const RealVector& b, const GridFunction& f);

}  // namespace muskat
