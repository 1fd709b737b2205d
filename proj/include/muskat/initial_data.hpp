#pragma once

#include "muskat/muskat.hpp"

namespace muskat {

/// Odd turnover family
///   z1 = alpha - s [sin alpha + r (sin alpha - sin(2 alpha)/2)]
///   z2 = b sum_{m=1}^{M} sin(m alpha)
/// with s = slope_amplitude, r = steepening_rate, M = mode_count and
/// b = height_amplitude. At alpha = 0: dz1 = 1 - s, d3z1 = s (1 - 3r),
/// dz2 = b M (M + 1) / 2.
struct GraphFamilyParams {
  double slope_amplitude = 1.0;
  double steepening_rate = 0.0;
  int mode_count = 3;
  double height_amplitude = 3.0;
};

/// Throws InvalidFamily if d3z1(0) <= 0, dz2(0) <= 0 or the modes do not fit the grid.
InterfaceState make_turnover_state(const GraphFamilyParams& p, const SpectralGrid& grid);

/// Coefficients of f_kappa = -2 sum_{k>=1} e^{-k kappa} cos(k x) / k^5, truncated
/// below the Nyquist mode. Its fourth derivative is
/// log(sin^2(x/2) + sinh^2(kappa/2)) minus its mean kappa - log 4.
GridFunction f_kappa(double kappa, const SpectralGrid& grid);

/// base with lambda * f added to the z1 component.
InterfaceState perturb(const SpectralGrid& grid, const InterfaceState& base, double lambda, const GridFunction& f);

}  // namespace muskat
