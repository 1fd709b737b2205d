#include "muskat/stability.hpp"

namespace muskat {

namespace {

double contour_h4_squared(const SpectralGrid& grid, const ComplexVector& d1, const ComplexVector& d2,
                          const ComplexVector& points) {
  double acc = 0.0;
  for (const ComplexVector* d : {&d1, &d2}) {
    acc += evaluate_series(grid, *d, points, 0).squaredNorm();
    acc += evaluate_series(grid, *d, points, 4).squaredNorm();
  }
  return acc * grid.spacing();
}

}  // namespace

RtProfile rt_unperturbed(const SpectralGrid& grid, const InterfaceState& state) {
  grid.check_size(state.p1.size());
  const RealVector dz1 = grid.inverse(derivative_coefficients(grid, state.p1, 1)).real().array() + 1.0;
  const RealVector dz2 = grid.inverse(derivative_coefficients(grid, state.p2, 1)).real();
  RtProfile rt{RealVector(grid.size())};
  for (Index i = 0; i < grid.size(); ++i) {
    const double norm = dz1[i] * dz1[i] + dz2[i] * dz2[i];
    if (norm < 1e-14) throw DegenerateGeometry("tangent vector vanishes", i, i);
    rt.values[i] = -kTwoPi * dz1[i] / norm;
  }
  return rt;
}

RtProfile rt_generalized(const SpectralGrid& grid, const InterfaceState& state, const LiftedContour& contour,
                         const RealVector& h_t, const RhsOptions& options) {
  grid.check_size(h_t.size());
  const PathSamples p = sample_on_contour(grid, state, contour);
  const ComplexVector a = a_tilde(grid, state, contour, options);
  RtProfile rt{RealVector(grid.size())};
  const Complex i_unit(0.0, 1.0);
  for (Index i = 0; i < grid.size(); ++i) {
    const Complex norm = p.dz1[i] * p.dz1[i] + p.dz2[i] * p.dz2[i];
    const Complex slope = p.tangent[i];
    rt.values[i] = (-kTwoPi * p.dz1[i] / norm / slope).real() + ((a[i] + i_unit * h_t[i]) / slope).imag();
  }
  return rt;
}

RtProfile rt_generalized(const SpectralGrid& grid, const InterfaceState& state, const RealVector& h_t,
                         const RhsOptions& options) {
  grid.check_size(h_t.size());
  const ComplexVector a = a_tilde(grid, state, options);
  RtProfile rt = rt_unperturbed(grid, state);
  rt.values += a.imag() + h_t;
  return rt;
}

double turnover_indicator(const SpectralGrid& grid, const InterfaceState& state) {
  grid.check_size(state.p1.size());
  return 1.0 + grid.inverse(derivative_coefficients(grid, state.p1, 1)).real().minCoeff();
}

double h4_distance(const SpectralGrid& grid, const InterfaceState& s1, const InterfaceState& s2,
                   const LiftedContour& contour) {
  grid.check_size(s1.p1.size());
  grid.check_size(s2.p1.size());
  const ComplexVector d1 = s1.p1 - s2.p1;
  const ComplexVector d2 = s1.p2 - s2.p2;
  const ComplexVector upper = contour.points(grid);
  const ComplexVector lower = contour.mirrored().points(grid);
  return std::sqrt(contour_h4_squared(grid, d1, d2, upper) + contour_h4_squared(grid, d1, d2, lower));
}

double h4_distance(const SpectralGrid& grid, const InterfaceState& s1, const InterfaceState& s2) {
  grid.check_size(s1.p1.size());
  grid.check_size(s2.p1.size());
  double acc = 0.0;
  for (const ComplexVector& d : {ComplexVector(s1.p1 - s2.p1), ComplexVector(s1.p2 - s2.p2)}) {
    acc += grid.inverse(d).squaredNorm();
    acc += grid.inverse(derivative_coefficients(grid, d, 4)).squaredNorm();
  }
  return std::sqrt(2.0 * acc * grid.spacing());
}

}  // namespace muskat
