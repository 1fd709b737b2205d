#pragma once

#include <optional>

#include "muskat/types.hpp"

namespace muskat {

enum class Representation { physical, spectral };

/// Samples or Fourier coefficients of a function on the periodic grid.
///
/// Coefficients follow g(x_j) = sum_k c_k exp(i k x_j) and are stored in FFT
/// order: index j holds wavenumber j for j <= N/2 and j - N otherwise.
struct GridFunction {
  ComplexVector data;
  Representation rep = Representation::physical;

  static GridFunction physical(ComplexVector values) { return {std::move(values), Representation::physical}; }
  static GridFunction spectral(ComplexVector coeffs) { return {std::move(coeffs), Representation::spectral}; }
  static GridFunction physical(const RealVector& values) {
    return {values.cast<Complex>(), Representation::physical};
  }

  Index size() const { return data.size(); }
};

/// N equispaced nodes x_j = 2 pi j / N on the torus, N a power of two.
class SpectralGrid {
 public:
  explicit SpectralGrid(Index n);

  Index size() const { return n_; }
  double spacing() const { return kTwoPi / static_cast<double>(n_); }
  double node(Index j) const { return spacing() * static_cast<double>(j); }
  RealVector nodes() const;

  /// Wavenumber stored at FFT index j.
  Index wavenumber(Index j) const { return j <= n_ / 2 ? j : j - n_; }
  Eigen::VectorXi wavenumbers() const;
  Index nyquist() const { return n_ / 2; }
  Index index_of(Index k) const { return k >= 0 ? k : k + n_; }

  ComplexVector forward(const ComplexVector& values) const;
  ComplexVector inverse(const ComplexVector& coeffs) const;

  /// Periodic trapezoid rule over one period.
  template <typename Derived>
  typename Derived::Scalar integrate(const Eigen::MatrixBase<Derived>& values) const {
    check_size(values.size());
    return values.sum() * spacing();
  }

  void check_size(Index m) const;

 private:
  Index n_;
};

GridFunction to_spectral(const SpectralGrid& grid, const GridFunction& g);
GridFunction to_physical(const SpectralGrid& grid, const GridFunction& g);

/// Zeroes every coefficient with |k| > cutoff.
GridFunction project_n(const SpectralGrid& grid, const GridFunction& g, Index cutoff);
ComplexVector project_coefficients(const SpectralGrid& grid, const ComplexVector& coeffs, Index cutoff);

/// Spectral d^order/dx^order. The Nyquist coefficient is dropped for order >= 1.
GridFunction derivative(const SpectralGrid& grid, const GridFunction& g, int order);
ComplexVector derivative_coefficients(const SpectralGrid& grid, const ComplexVector& coeffs, int order);

/// Half-Laplacian: multiplier |k|.
GridFunction lambda_op(const SpectralGrid& grid, const GridFunction& g);

/// Hilbert transform: multiplier -i sign(k), zero mean and Nyquist.
GridFunction hilbert(const SpectralGrid& grid, const GridFunction& g);

struct FitBand {
  Index lo = 0;
  Index hi = 0;
};

FitBand default_fit_band(const SpectralGrid& grid);

/// Width of the strip of analyticity estimated from the exponential decay of
/// the Fourier coefficients.
///
/// Fits log|c_k| = a - delta |k| - p log|k| by least squares over the band and
/// returns max(delta, 0). The algebraic term absorbs power-law prefactors so
/// that purely algebraic decay reports zero width. Coefficients below 1e-14
/// relative to the largest coefficient are left out of the fit.
double analyticity_radius(const SpectralGrid& grid, const GridFunction& g, std::optional<FitBand> band = std::nullopt);

bool is_conjugate_symmetric(const SpectralGrid& grid, const ComplexVector& coeffs, double tol);

/// Projects coefficients onto the real-valued subspace: c_{-k} = conj(c_k),
/// c_0 and c_{N/2} real.
ComplexVector symmetrize(const SpectralGrid& grid, const ComplexVector& coeffs);

/// Evaluates sum_k (ik)^order c_k exp(i k zeta) at arbitrary complex points.
/// The Nyquist coefficient is split evenly between +N/2 and -N/2.
ComplexVector evaluate_series(const SpectralGrid& grid, const ComplexVector& coeffs, const ComplexVector& points,
                              int order = 0);

}  // namespace muskat
