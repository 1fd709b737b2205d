#include "muskat/muskat.hpp"

#include <algorithm>
#include <limits>

#include "muskat/parallel.hpp"

namespace muskat {

namespace {

struct RealSamples {
  RealVector z1, z2, dz1, dz2, d2z1, d2z2;
};

RealVector real_values(const SpectralGrid& grid, const ComplexVector& coeffs, int order) {
  return grid.inverse(derivative_coefficients(grid, coeffs, order)).real();
}

RealSamples real_samples(const SpectralGrid& grid, const InterfaceState& state) {
  grid.check_size(state.p1.size());
  grid.check_size(state.p2.size());
  RealSamples s;
  s.z1 = state.z1_values(grid);
  s.z2 = state.z2_values(grid);
  s.dz1 = real_values(grid, state.p1, 1).array() + 1.0;
  s.dz2 = real_values(grid, state.p2, 1);
  s.d2z1 = real_values(grid, state.p1, 2);
  s.d2z2 = real_values(grid, state.p2, 2);
  for (Index i = 0; i < s.dz1.size(); ++i)
    if (s.dz1[i] * s.dz1[i] + s.dz2[i] * s.dz2[i] < 1e-14)
      throw DegenerateGeometry("tangent vector vanishes", i, i);
  return s;
}

Complex half_cot(Complex z) { return 0.5 * std::cos(0.5 * z) / std::sin(0.5 * z); }

double pair_distance(Complex a, Complex b) {
  const Complex d = a - b;
  const double r = torus_distance(d.real()) + std::abs(d.imag());
  return r * r;
}

template <typename Step>
Tendency assemble_rhs(const SpectralGrid& grid, const InterfaceState& state, const RhsOptions& options, Step&& pair_step,
                      bool use_diagonal) {
  const Index n = grid.size();
  const RealSamples s = real_samples(grid, state);
  RealVector r1(n), r2(n);
  parallel_for(n, worker_count(options.workers), [&](Index i) {
    double a1 = 0.0;
    double a2 = 0.0;
    for (Index j = 0; j < n; ++j) {
      const double w = pair_step(i, j);
      if (w == 0.0) continue;
      const double dz1 = s.z1[i] - s.z1[j];
      const double den = std::cosh(s.z2[i] - s.z2[j]) - std::cos(dz1);
      const double dist = torus_distance(grid.node(i) - grid.node(j));
      if (std::abs(den) < options.chord_arc_floor * dist * dist)
        throw DegenerateGeometry("chord-arc condition fails", i, j);
      const double k = w * std::sin(dz1) / den;
      a1 += k * (s.dz1[i] - s.dz1[j]);
      a2 += k * (s.dz2[i] - s.dz2[j]);
    }
    if (use_diagonal) {
      const double norm = s.dz1[i] * s.dz1[i] + s.dz2[i] * s.dz2[i];
      a1 += 2.0 * s.dz1[i] * s.d2z1[i] / norm;
      a2 += 2.0 * s.dz1[i] * s.d2z2[i] / norm;
    }
    const double scale = options.density_jump_over_2pi * grid.spacing();
    r1[i] = scale * a1;
    r2[i] = scale * a2;
  });
  return {symmetrize(grid, grid.forward(r1.cast<Complex>())), symmetrize(grid, grid.forward(r2.cast<Complex>()))};
}

ComplexVector a_tilde_on_path(const SpectralGrid& grid, const PathSamples& p, const RhsOptions& options) {
  const Index n = grid.size();
  ComplexVector out(n);
  parallel_for(n, worker_count(options.workers), [&](Index i) {
    const Complex norm = p.dz1[i] * p.dz1[i] + p.dz2[i] * p.dz2[i];
    const Complex residue = p.dz1[i] / norm;
    Complex acc = subtracted_kernel_limit(p.dz1[i], p.dz2[i], p.d2z1[i], p.d2z2[i]) * p.tangent[i];
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      const Complex dz1 = p.z1[i] - p.z1[j];
      const Complex den = std::cosh(p.z2[i] - p.z2[j]) - std::cos(dz1);
      if (std::abs(den) < options.chord_arc_floor * pair_distance(p.zeta[i], p.zeta[j]))
        throw DegenerateGeometry("chord-arc condition fails", i, j);
      acc += (std::sin(dz1) / den - 2.0 * residue * half_cot(p.zeta[i] - p.zeta[j])) * p.tangent[j];
    }
    out[i] = acc * grid.spacing();
  });
  return out;
}

double chord_ratio_min(const PathSamples& a, const PathSamples& b, bool same_path, int workers) {
  const Index n = a.zeta.size();
  std::vector<double> row_min(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
  parallel_for(n, workers, [&](Index i) {
    double m = std::numeric_limits<double>::infinity();
    for (Index j = 0; j < n; ++j) {
      if (same_path && j == i) continue;
      const double d = pair_distance(a.zeta[i], b.zeta[j]);
      if (d == 0.0) continue;
      const Complex den = std::cosh(a.z2[i] - b.z2[j]) - std::cos(a.z1[i] - b.z1[j]);
      m = std::min(m, std::abs(den) / d);
    }
    row_min[static_cast<std::size_t>(i)] = m;
  });
  return *std::min_element(row_min.begin(), row_min.end());
}

}  // namespace

InterfaceState InterfaceState::flat(const SpectralGrid& grid, double time) {
  return {ComplexVector::Zero(grid.size()), ComplexVector::Zero(grid.size()), time};
}

InterfaceState InterfaceState::from_samples(const SpectralGrid& grid, const RealVector& p1_values,
                                            const RealVector& z2_values, double time) {
  grid.check_size(p1_values.size());
  grid.check_size(z2_values.size());
  return {symmetrize(grid, grid.forward(p1_values.cast<Complex>())),
          symmetrize(grid, grid.forward(z2_values.cast<Complex>())), time};
}

RealVector InterfaceState::z1_values(const SpectralGrid& grid) const {
  return grid.inverse(p1).real() + grid.nodes();
}

RealVector InterfaceState::z2_values(const SpectralGrid& grid) const { return grid.inverse(p2).real(); }

double kernel(const SpectralGrid& grid, const InterfaceState& state, Index i, Index j, double chord_arc_floor) {
  if (i < 0 || j < 0 || i >= grid.size() || j >= grid.size()) throw InvalidArgument("node index out of range");
  if (i == j) throw InvalidArgument("kernel is singular on the diagonal; use the integrated forms");
  const RealVector z1 = state.z1_values(grid);
  const RealVector z2 = state.z2_values(grid);
  const double dz1 = z1[i] - z1[j];
  const double den = std::cosh(z2[i] - z2[j]) - std::cos(dz1);
  const double dist = torus_distance(grid.node(i) - grid.node(j));
  if (std::abs(den) < chord_arc_floor * dist * dist) throw DegenerateGeometry("chord-arc condition fails", i, j);
  return std::sin(dz1) / den;
}

Tendency rhs(const SpectralGrid& grid, const InterfaceState& state, const RhsOptions& options) {
  return assemble_rhs(
      grid, state, options, [](Index i, Index j) { return i == j ? 0.0 : 1.0; }, true);
}

Tendency rhs_alternating(const SpectralGrid& grid, const InterfaceState& state, const RhsOptions& options) {
  return assemble_rhs(
      grid, state, options, [](Index i, Index j) { return ((i - j) % 2 != 0) ? 2.0 : 0.0; }, false);
}

PathSamples sample_on_torus(const SpectralGrid& grid, const InterfaceState& state) {
  const RealSamples s = real_samples(grid, state);
  const Index n = grid.size();
  PathSamples p;
  p.zeta = grid.nodes().cast<Complex>();
  p.tangent = ComplexVector::Ones(n);
  p.z1 = s.z1.cast<Complex>();
  p.z2 = s.z2.cast<Complex>();
  p.dz1 = s.dz1.cast<Complex>();
  p.dz2 = s.dz2.cast<Complex>();
  p.d2z1 = s.d2z1.cast<Complex>();
  p.d2z2 = s.d2z2.cast<Complex>();
  return p;
}

PathSamples sample_on_contour(const SpectralGrid& grid, const InterfaceState& state, const LiftedContour& contour) {
  grid.check_size(state.p1.size());
  PathSamples p;
  p.zeta = contour.points(grid);
  p.tangent = contour.tangent();
  p.z1 = p.zeta + evaluate_series(grid, state.p1, p.zeta, 0);
  p.z2 = evaluate_series(grid, state.p2, p.zeta, 0);
  p.dz1 = evaluate_series(grid, state.p1, p.zeta, 1).array() + 1.0;
  p.dz2 = evaluate_series(grid, state.p2, p.zeta, 1);
  p.d2z1 = evaluate_series(grid, state.p1, p.zeta, 2);
  p.d2z2 = evaluate_series(grid, state.p2, p.zeta, 2);
  for (Index i = 0; i < p.zeta.size(); ++i)
    if (std::abs(p.dz1[i] * p.dz1[i] + p.dz2[i] * p.dz2[i]) < 1e-14)
      throw DegenerateGeometry("tangent vector vanishes on contour", i, i);
  return p;
}

Complex subtracted_kernel_limit(Complex dz1, Complex dz2, Complex d2z1, Complex d2z2) {
  const Complex norm = dz1 * dz1 + dz2 * dz2;
  const Complex p = (dz1 * d2z1 + dz2 * d2z2) / norm;
  return (2.0 * dz1 * p - d2z1) / norm;
}

ComplexVector a_tilde(const SpectralGrid& grid, const InterfaceState& state, const RhsOptions& options) {
  return a_tilde_on_path(grid, sample_on_torus(grid, state), options);
}

ComplexVector a_tilde(const SpectralGrid& grid, const InterfaceState& state, const LiftedContour& contour,
                      const RhsOptions& options) {
  return a_tilde_on_path(grid, sample_on_contour(grid, state, contour), options);
}

double chord_arc_constant(const SpectralGrid& grid, const InterfaceState& state, int workers) {
  const PathSamples p = sample_on_torus(grid, state);
  return chord_ratio_min(p, p, true, worker_count(workers));
}

double chord_arc_constant(const SpectralGrid& grid, const InterfaceState& state, const LiftedContour& contour,
                          int workers) {
  const int w = worker_count(workers);
  const PathSamples upper = sample_on_contour(grid, state, contour);
  const PathSamples lower = sample_on_contour(grid, state, contour.mirrored());
  return std::min({chord_ratio_min(upper, upper, true, w), chord_ratio_min(lower, lower, true, w),
                   chord_ratio_min(upper, lower, false, w)});
}

}  // namespace muskat
