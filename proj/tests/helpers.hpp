#pragma once

#include <random>

#include "muskat/muskat.hpp"

namespace helpers {

using namespace muskat;

inline RealVector random_real(Index n, std::mt19937& rng) {
  std::normal_distribution<double> d;
  RealVector v(n);
  for (Index i = 0; i < n; ++i) v[i] = d(rng);
  return v;
}

// Smooth random real function: random coefficients damped like e^{-decay |k|}.
inline RealVector random_smooth(const SpectralGrid& grid, std::mt19937& rng, double decay, Index max_mode) {
  std::normal_distribution<double> d;
  RealVector x = grid.nodes();
  RealVector v = RealVector::Zero(grid.size());
  for (Index k = 1; k <= max_mode; ++k) {
    const double a = d(rng) * std::exp(-decay * k);
    const double b = d(rng) * std::exp(-decay * k);
    v += (a * (k * x.array()).cos() + b * (k * x.array()).sin()).matrix();
  }
  return v;
}

inline ComplexVector single_mode(const SpectralGrid& grid, Index k, Complex amplitude = 1.0) {
  ComplexVector c = ComplexVector::Zero(grid.size());
  c[grid.index_of(k)] = amplitude;
  return c;
}

inline ComplexVector cosine_mode(const SpectralGrid& grid, Index k, double amplitude) {
  ComplexVector c = ComplexVector::Zero(grid.size());
  c[grid.index_of(k)] += 0.5 * amplitude;
  c[grid.index_of(-k)] += 0.5 * amplitude;
  return c;
}

inline ComplexVector sine_mode(const SpectralGrid& grid, Index k, double amplitude) {
  ComplexVector c = ComplexVector::Zero(grid.size());
  c[grid.index_of(k)] += Complex(0.0, -0.5 * amplitude);
  c[grid.index_of(-k)] += Complex(0.0, 0.5 * amplitude);
  return c;
}

inline RealVector values(const SpectralGrid& grid, const ComplexVector& c) { return grid.inverse(c).real(); }

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& v) {
  return v.size() ? static_cast<double>(v.cwiseAbs().maxCoeff()) : 0.0;
}

}  // namespace helpers
