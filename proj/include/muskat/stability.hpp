#pragma once

#include "muskat/muskat.hpp"

namespace muskat {

/// Rayleigh-Taylor function sampled at the grid (or contour) nodes.
struct RtProfile {
  RealVector values;

  double min() const { return values.minCoeff(); }
  double max() const { return values.maxCoeff(); }
};

/// sigma(x) = -2 pi dz1 / (dz1^2 + dz2^2) on the real torus.
RtProfile rt_unperturbed(const SpectralGrid& grid, const InterfaceState& state);

/// Generalized RT function on Gamma_+:
///   Re(-2 pi dz1 / (dz1^2 + dz2^2) / (1 + i h')) + Im((a~ + i h_t) / (1 + i h'))
/// with every quantity holomorphically continued to x + i h(x).
RtProfile rt_generalized(const SpectralGrid& grid, const InterfaceState& state, const LiftedContour& contour,
                         const RealVector& h_t, const RhsOptions& options = {});
/// Same on the torus itself (h = h' = 0).
RtProfile rt_generalized(const SpectralGrid& grid, const InterfaceState& state, const RealVector& h_t,
                         const RhsOptions& options = {});

/// min over nodes of dz1/dx; positive iff the sampled curve is a graph.
double turnover_indicator(const SpectralGrid& grid, const InterfaceState& state);

/// H^4 distance on Gamma_+ and Gamma_-: square root of
///   sum_{+-} sum_mu int |D_mu|^2 + |d^4 D_mu|^2 dRe(zeta),  D = s1 - s2.
double h4_distance(const SpectralGrid& grid, const InterfaceState& s1, const InterfaceState& s2,
                   const LiftedContour& contour);
/// Flat contour: both boundary curves collapse onto the torus.
double h4_distance(const SpectralGrid& grid, const InterfaceState& s1, const InterfaceState& s2);

}  // namespace muskat
