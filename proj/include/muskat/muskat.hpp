#pragma once

#include <array>
#include <cmath>

#include "muskat/contour.hpp"
#include "muskat/grid.hpp"

namespace muskat {

/// The interface z(alpha) = (alpha + p1(alpha), p2(alpha)) through the Fourier
/// coefficients of its periodic parts. States are real curves: the coefficient
/// vectors are kept conjugate-symmetric.
struct InterfaceState {
  ComplexVector p1;
  ComplexVector p2;
  double time = 0.0;

  Index size() const { return p1.size(); }

  static InterfaceState flat(const SpectralGrid& grid, double time = 0.0);
  /// From node samples of z1 - alpha and z2.
  static InterfaceState from_samples(const SpectralGrid& grid, const RealVector& p1_values, const RealVector& z2_values,
                                     double time = 0.0);

  RealVector z1_values(const SpectralGrid& grid) const;
  RealVector z2_values(const SpectralGrid& grid) const;
};

/// Time derivatives of the coefficient vectors of an InterfaceState.
struct Tendency {
  ComplexVector d1;
  ComplexVector d2;
};

struct RhsOptions {
  /// Pairs with |cosh dz2 - cos dz1| / ||x - y||^2 below this are rejected.
  double chord_arc_floor = 1e-4;
  /// Scales the evolution law; 1 gives the normalization without the 1/2pi prefactor.
  double density_jump_over_2pi = 1.0;
  /// Worker count for the node loop; 0 defers to worker_count().
  int workers = 0;
};

template <typename Scalar>
Scalar muskat_kernel(Scalar dz1, Scalar dz2) {
  using std::cos;
  using std::cosh;
  using std::sin;
  return sin(dz1) / (cosh(dz2) - cos(dz1));
}

/// Distance from x to 2 pi Z.
inline double torus_distance(double x) {
  const double r = std::remainder(x, kTwoPi);
  return std::abs(r);
}

/// sin(dz1) / (cosh(dz2) - cos(dz1)) between nodes i != j. Throws
/// InvalidArgument for i == j (the diagonal is handled by the integrals that
/// use the kernel) and DegenerateGeometry below the chord-arc floor.
double kernel(const SpectralGrid& grid, const InterfaceState& state, Index i, Index j, double chord_arc_floor = 1e-4);

/// Evolution law:
///   dz_mu/dt(x) = int_T K(x, u) (dz_mu(x) - dz_mu(u)) du
/// by the trapezoid rule; the diagonal takes the analytic limit
/// 2 dz1 d2z_mu / (dz1^2 + dz2^2).
Tendency rhs(const SpectralGrid& grid, const InterfaceState& state, const RhsOptions& options = {});

/// Same integral by alternating-point quadrature: node i sums over nodes j
/// with i - j odd, weight 2h. Never touches the diagonal.
Tendency rhs_alternating(const SpectralGrid& grid, const InterfaceState& state, const RhsOptions& options = {});

/// Node values of the curve and its first two derivatives along a path,
/// either the real torus or a lifted contour (holomorphic extension).
struct PathSamples {
  ComplexVector zeta;
  ComplexVector tangent;  // dw/du
  ComplexVector z1, z2;
  ComplexVector dz1, dz2;
  ComplexVector d2z1, d2z2;
};

PathSamples sample_on_torus(const SpectralGrid& grid, const InterfaceState& state);
PathSamples sample_on_contour(const SpectralGrid& grid, const InterfaceState& state, const LiftedContour& contour);

/// Limit of a(zeta, w) as w -> zeta, where a is the kernel minus
/// [dz1 / (dz1^2 + dz2^2)] cot((zeta - w)/2).
Complex subtracted_kernel_limit(Complex dz1, Complex dz2, Complex d2z1, Complex d2z2);

/// a~(zeta) = int a(zeta, w) dw along the torus (or Gamma_+). Equals the PV
/// of the raw kernel integral because PV int cot = 0.
ComplexVector a_tilde(const SpectralGrid& grid, const InterfaceState& state, const RhsOptions& options = {});
ComplexVector a_tilde(const SpectralGrid& grid, const InterfaceState& state, const LiftedContour& contour,
                      const RhsOptions& options = {});

/// min over sampled pairs of |cosh dz2 - cos dz1| / (||Re(zeta - w)|| + |Im(zeta - w)|)^2.
double chord_arc_constant(const SpectralGrid& grid, const InterfaceState& state, int workers = 0);
/// On a lifted contour the pairs range over Gamma_+ x Gamma_+, Gamma_- x Gamma_- and Gamma_+ x Gamma_-.
double chord_arc_constant(const SpectralGrid& grid, const InterfaceState& state, const LiftedContour& contour,
                          int workers = 0);

/// Coefficients with which the six safe integrals enter d^4/dx^4 of the
/// evolution law: Leibniz weight 4 for the single-derivative hit on the kernel,
/// 1 for the top-order hit, with signs from the quotient rule.
inline constexpr std::array<double, 6> kSafeCoefficients{4.0, -4.0, -4.0, 1.0, -1.0, -1.0};

struct D4Component {
  RealVector total;      // spectral d^4/dx^4 of the evolution law
  RealVector dangerous;  // int K (d^5 z(x) - d^5 z(u)) du
  std::array<RealVector, 6> safe;  // coefficient already applied
  RealVector easy;       // total - dangerous - sum(safe)
};

struct D4Decomposition {
  std::array<D4Component, 2> component;
};

/// Splits d^4/dx^4 of the evolution law into its dangerous term (five
/// derivatives on the curve), the six safe terms (four derivatives) and the
/// easy remainder, on the real torus.
D4Decomposition rhs_d4_decomposition(const SpectralGrid& grid, const InterfaceState& state,
                                     const RhsOptions& options = {});

}  // namespace muskat
