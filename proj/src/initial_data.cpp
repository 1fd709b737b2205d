#include "muskat/initial_data.hpp"

#include <cmath>

namespace muskat {

InterfaceState make_turnover_state(const GraphFamilyParams& p, const SpectralGrid& grid) {
  const double s = p.slope_amplitude;
  const double r = p.steepening_rate;
  if (!(s * (1.0 - 3.0 * r) > 0.0)) throw InvalidFamily("family needs slope_amplitude * (1 - 3 steepening_rate) > 0");
  if (!(p.height_amplitude > 0.0)) throw InvalidFamily("family needs height_amplitude > 0");
  if (p.mode_count < 1 || p.mode_count >= grid.nyquist() || grid.nyquist() <= 2)
    throw InvalidFamily("mode_count must lie in [1, N/2)");

  InterfaceState state = InterfaceState::flat(grid);
  // sin(k a) = (e^{ika} - e^{-ika}) / 2i
  auto add_sine = [&](ComplexVector& c, Index k, double amplitude) {
    c[grid.index_of(k)] += Complex(0.0, -0.5 * amplitude);
    c[grid.index_of(-k)] += Complex(0.0, 0.5 * amplitude);
  };
  add_sine(state.p1, 1, -s * (1.0 + r));
  add_sine(state.p1, 2, 0.5 * s * r);
  for (int m = 1; m <= p.mode_count; ++m) add_sine(state.p2, m, p.height_amplitude);
  return state;
}

GridFunction f_kappa(double kappa, const SpectralGrid& grid) {
  if (!(kappa >= 0.0)) throw InvalidArgument("kappa must be non-negative");
  ComplexVector c = ComplexVector::Zero(grid.size());
  for (Index k = 1; k < grid.nyquist(); ++k) {
    const double v = -std::exp(-static_cast<double>(k) * kappa) / std::pow(static_cast<double>(k), 5);
    c[grid.index_of(k)] = v;
    c[grid.index_of(-k)] = v;
  }
  return GridFunction::spectral(c);
}

InterfaceState perturb(const SpectralGrid& grid, const InterfaceState& base, double lambda, const GridFunction& f) {
  if (!(lambda >= 0.0)) throw InvalidArgument("lambda must be non-negative");
  grid.check_size(base.p1.size());
  InterfaceState out = base;
  out.p1 += lambda * to_spectral(grid, f).data;
  return out;
}

}  // namespace muskat
