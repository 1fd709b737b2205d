#include "muskat/grid.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <unsupported/Eigen/FFT>

namespace muskat {

namespace {

Eigen::FFT<double>& fft_engine() {
  thread_local Eigen::FFT<double> engine = [] {
    Eigen::FFT<double> f;
    f.SetFlag(Eigen::FFT<double>::Unscaled);
    return f;
  }();
  return engine;
}

Complex i_pow(int order) {
  switch (order % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

template <typename Fn>
GridFunction apply_multiplier(const SpectralGrid& grid, const GridFunction& g, Fn&& multiplier) {
  grid.check_size(g.size());
  ComplexVector c = g.rep == Representation::spectral ? g.data : grid.forward(g.data);
  for (Index j = 0; j < c.size(); ++j) c[j] *= multiplier(grid.wavenumber(j));
  if (g.rep == Representation::spectral) return GridFunction::spectral(std::move(c));
  return GridFunction::physical(grid.inverse(c));
}

}  // namespace

SpectralGrid::SpectralGrid(Index n) : n_(n) {
  if (n < 4 || (n & (n - 1)) != 0) throw InvalidArgument("grid size must be a power of two >= 4, got " + std::to_string(n));
}

RealVector SpectralGrid::nodes() const {
  RealVector x(n_);
  for (Index j = 0; j < n_; ++j) x[j] = node(j);
  return x;
}

Eigen::VectorXi SpectralGrid::wavenumbers() const {
  Eigen::VectorXi k(n_);
  for (Index j = 0; j < n_; ++j) k[j] = static_cast<int>(wavenumber(j));
  return k;
}

void SpectralGrid::check_size(Index m) const {
  if (m != n_) throw SizeMismatch("expected " + std::to_string(n_) + " samples, got " + std::to_string(m));
}

ComplexVector SpectralGrid::forward(const ComplexVector& values) const {
  check_size(values.size());
  ComplexVector out(n_);
  fft_engine().fwd(out, values);
  return out / static_cast<double>(n_);
}

ComplexVector SpectralGrid::inverse(const ComplexVector& coeffs) const {
  check_size(coeffs.size());
  ComplexVector out(n_);
  fft_engine().inv(out, coeffs);
  return out;
}

GridFunction to_spectral(const SpectralGrid& grid, const GridFunction& g) {
  grid.check_size(g.size());
  if (g.rep == Representation::spectral) return g;
  return GridFunction::spectral(grid.forward(g.data));
}

GridFunction to_physical(const SpectralGrid& grid, const GridFunction& g) {
  grid.check_size(g.size());
  if (g.rep == Representation::physical) return g;
  return GridFunction::physical(grid.inverse(g.data));
}

ComplexVector project_coefficients(const SpectralGrid& grid, const ComplexVector& coeffs, Index cutoff) {
  if (cutoff < 0 || cutoff > grid.size() / 2)
    throw InvalidCutoff("cutoff " + std::to_string(cutoff) + " outside [0, N/2]");
  grid.check_size(coeffs.size());
  ComplexVector c = coeffs;
  for (Index j = 0; j < c.size(); ++j)
    if (std::abs(grid.wavenumber(j)) > cutoff) c[j] = 0.0;
  return c;
}

GridFunction project_n(const SpectralGrid& grid, const GridFunction& g, Index cutoff) {
  if (cutoff < 0 || cutoff > grid.size() / 2)
    throw InvalidCutoff("cutoff " + std::to_string(cutoff) + " outside [0, N/2]");
  return apply_multiplier(grid, g, [cutoff](Index k) { return std::abs(k) > cutoff ? 0.0 : 1.0; });
}

ComplexVector derivative_coefficients(const SpectralGrid& grid, const ComplexVector& coeffs, int order) {
  if (order < 0 || order > 8) throw InvalidArgument("derivative order must lie in [0, 8]");
  grid.check_size(coeffs.size());
  if (order == 0) return coeffs;
  ComplexVector c(coeffs.size());
  const Complex unit = i_pow(order);
  for (Index j = 0; j < c.size(); ++j) {
    const Index k = grid.wavenumber(j);
    c[j] = k == grid.nyquist() ? Complex(0.0) : coeffs[j] * unit * std::pow(static_cast<double>(k), order);
  }
  return c;
}

GridFunction derivative(const SpectralGrid& grid, const GridFunction& g, int order) {
  if (order < 0 || order > 8) throw InvalidArgument("derivative order must lie in [0, 8]");
  if (g.rep == Representation::spectral) return GridFunction::spectral(derivative_coefficients(grid, g.data, order));
  grid.check_size(g.size());
  return GridFunction::physical(grid.inverse(derivative_coefficients(grid, grid.forward(g.data), order)));
}

GridFunction lambda_op(const SpectralGrid& grid, const GridFunction& g) {
  return apply_multiplier(grid, g, [](Index k) { return Complex(static_cast<double>(std::abs(k))); });
}

GridFunction hilbert(const SpectralGrid& grid, const GridFunction& g) {
  const Index nyq = grid.nyquist();
  return apply_multiplier(grid, g, [nyq](Index k) {
    if (k == 0 || k == nyq) return Complex(0.0);
    return Complex(0.0, k > 0 ? -1.0 : 1.0);
  });
}

FitBand default_fit_band(const SpectralGrid& grid) { return {grid.size() / 8, grid.size() / 3}; }

double analyticity_radius(const SpectralGrid& grid, const GridFunction& g, std::optional<FitBand> band) {
  const ComplexVector c = to_spectral(grid, g).data;
  const FitBand b = band.value_or(default_fit_band(grid));
  if (b.lo < 1 || b.hi < b.lo || b.hi > grid.size() / 2) throw InvalidArgument("fit band outside [1, N/2]");

  const double peak = c.cwiseAbs().maxCoeff();
  if (peak == 0.0) throw UndefinedRadius("all coefficients vanish");
  const double floor = 1e-14 * peak;

  std::vector<double> ks;
  std::vector<double> logs;
  for (Index k = b.lo; k <= b.hi; ++k) {
    double mag = std::abs(c[grid.index_of(k)]);
    if (k < grid.nyquist()) mag = std::max(mag, std::abs(c[grid.index_of(-k)]));
    if (mag > floor) {
      ks.push_back(static_cast<double>(k));
      logs.push_back(std::log(mag));
    }
  }
  if (ks.empty()) throw UndefinedRadius("no coefficient above the noise floor in the fit band");

  const Index m = static_cast<Index>(ks.size());
  const Index cols = m >= 3 ? 3 : m;
  Eigen::MatrixXd design(m, cols);
  Eigen::VectorXd rhs(m);
  for (Index r = 0; r < m; ++r) {
    design(r, 0) = 1.0;
    if (cols > 1) design(r, 1) = -ks[r];
    if (cols > 2) design(r, 2) = -std::log(ks[r]);
    rhs[r] = logs[r];
  }
  if (cols == 1) return 0.0;
  const Eigen::VectorXd coef = design.colPivHouseholderQr().solve(rhs);
  return std::max(coef[1], 0.0);
}

bool is_conjugate_symmetric(const SpectralGrid& grid, const ComplexVector& coeffs, double tol) {
  grid.check_size(coeffs.size());
  const double scale = std::max(1.0, coeffs.cwiseAbs().maxCoeff());
  for (Index j = 0; j < coeffs.size(); ++j) {
    const Index partner = grid.index_of(-grid.wavenumber(j)) % grid.size();
    if (std::abs(coeffs[j] - std::conj(coeffs[partner])) > tol * scale) return false;
  }
  return true;
}

ComplexVector symmetrize(const SpectralGrid& grid, const ComplexVector& coeffs) {
  grid.check_size(coeffs.size());
  ComplexVector out(coeffs.size());
  for (Index j = 0; j < coeffs.size(); ++j) {
    const Index partner = grid.index_of(-grid.wavenumber(j)) % grid.size();
    out[j] = 0.5 * (coeffs[j] + std::conj(coeffs[partner]));
  }
  return out;
}

ComplexVector evaluate_series(const SpectralGrid& grid, const ComplexVector& coeffs, const ComplexVector& points,
                              int order) {
  grid.check_size(coeffs.size());
  const Index n = grid.size();
  const Complex unit = i_pow(order);
  ComplexVector out = ComplexVector::Zero(points.size());
  for (Index p = 0; p < points.size(); ++p) {
    const Complex zeta = points[p];
    Complex acc = 0.0;
    for (Index j = 0; j < n; ++j) {
      if (coeffs[j] == Complex(0.0)) continue;
      const Index k = grid.wavenumber(j);
      const double kd = static_cast<double>(k);
      if (k == grid.nyquist()) {
        const Complex half = 0.5 * coeffs[j] * std::pow(kd, order);
        acc += half * std::exp(Complex(0.0, 1.0) * kd * zeta);
        acc += half * std::pow(-1.0, order) * std::exp(Complex(0.0, -1.0) * kd * zeta);
      } else {
        acc += coeffs[j] * std::pow(kd, order) * std::exp(Complex(0.0, 1.0) * kd * zeta);
      }
    }
    out[p] = unit * acc;
  }
  return out;
}

}  // namespace muskat
