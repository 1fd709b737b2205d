#include "muskat/contour.hpp"

#include <cmath>

namespace muskat {

namespace {

RealVector spectral_derivative(const SpectralGrid& grid, const RealVector& v, int order) {
  return derivative(grid, GridFunction::physical(v), order).data.real();
}

Complex half_cot(Complex z) { return 0.5 * std::cos(0.5 * z) / std::sin(0.5 * z); }

}  // namespace

LiftedContour LiftedContour::from_heights(const SpectralGrid& grid, const RealVector& heights, int sign) {
  grid.check_size(heights.size());
  return from_heights(grid, heights, spectral_derivative(grid, heights, 1), sign);
}

LiftedContour LiftedContour::from_heights(const SpectralGrid& grid, const RealVector& heights, const RealVector& slope,
                                          int sign) {
  grid.check_size(heights.size());
  grid.check_size(slope.size());
  if (sign != 1 && sign != -1) throw InvalidContour("contour sign must be +1 or -1");
  if ((heights.array() <= 0.0).any()) throw InvalidContour("contour height must be strictly positive");
  const RealVector spectral_slope = spectral_derivative(grid, heights, 1);
  if ((spectral_slope - slope).cwiseAbs().maxCoeff() > 1e-8)
    throw InvalidContour("h' disagrees with the spectral derivative of h");
  return LiftedContour{heights, slope, spectral_derivative(grid, heights, 2), sign};
}

LiftedContour LiftedContour::constant(const SpectralGrid& grid, double height, int sign) {
  return from_heights(grid, RealVector::Constant(grid.size(), height), sign);
}

LiftedContour LiftedContour::mirrored() const { return LiftedContour{h, h_prime, h_second, -sign}; }

ComplexVector LiftedContour::points(const SpectralGrid& grid) const {
  grid.check_size(h.size());
  ComplexVector z(h.size());
  for (Index j = 0; j < h.size(); ++j) z[j] = Complex(grid.node(j), sign * h[j]);
  return z;
}

ComplexVector LiftedContour::tangent() const {
  ComplexVector t(h.size());
  for (Index j = 0; j < h.size(); ++j) t[j] = Complex(1.0, sign * h_prime[j]);
  return t;
}

ComplexVector LiftedContour::tangent_derivative() const {
  ComplexVector t(h.size());
  for (Index j = 0; j < h.size(); ++j) t[j] = Complex(0.0, sign * h_second[j]);
  return t;
}

ComplexVector lambda_gamma(const SpectralGrid& grid, const ComplexVector& f_samples, const ComplexVector& f_prime_samples,
                           const LiftedContour& contour) {
  const Index n = grid.size();
  grid.check_size(f_samples.size());
  grid.check_size(f_prime_samples.size());
  grid.check_size(contour.h.size());
  if ((contour.h.array() <= 0.0).any()) throw InvalidContour("contour height must be strictly positive");

  const ComplexVector z = contour.points(grid);
  const ComplexVector dw = contour.tangent();
  const ComplexVector diagonal = derivative(grid, GridFunction::physical(f_prime_samples), 1).data;

  ComplexVector out(n);
  for (Index i = 0; i < n; ++i) {
    Complex acc = diagonal[i];
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      acc += half_cot(z[i] - z[j]) * (f_prime_samples[i] - f_prime_samples[j]) * dw[j];
    }
    out[i] = -acc * grid.spacing() / kPi;
  }
  return out;
}

ComplexVector pv_cot_integral(const SpectralGrid& grid, const LiftedContour& contour) {
  const Index n = grid.size();
  grid.check_size(contour.h.size());
  const ComplexVector z = contour.points(grid);
  const ComplexVector dw = contour.tangent();
  const ComplexVector ddw = contour.tangent_derivative();

  ComplexVector out(n);
  for (Index i = 0; i < n; ++i) {
    Complex acc = -ddw[i] / dw[i];
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      const double dx = grid.node(i) - grid.node(j);
      acc += 2.0 * half_cot(z[i] - z[j]) * dw[j] - 2.0 * half_cot(Complex(dx, 0.0));
    }
    out[i] = acc * grid.spacing();
  }
  return out;
}

ComplexVector pv_cot_integral(const SpectralGrid& grid) {
  const Index n = grid.size();
  ComplexVector out(n);
  for (Index i = 0; i < n; ++i) {
    double acc = 0.0;
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      acc += 1.0 / std::tan(0.5 * (grid.node(i) - grid.node(j)));
    }
    out[i] = acc * grid.spacing();
  }
  return out;
}

double garding_form(const SpectralGrid& grid, const RealVector& a, const RealVector& b, const GridFunction& f) {
  grid.check_size(a.size());
  grid.check_size(b.size());
  const ComplexVector values = to_physical(grid, f).data;
  const ComplexVector lam = to_physical(grid, lambda_op(grid, f)).data;
  const ComplexVector df = to_physical(grid, derivative(grid, f, 1)).data * Complex(0.0, -1.0);
  const ComplexVector integrand =
      (a.cast<Complex>().cwiseProduct(lam) + b.cast<Complex>().cwiseProduct(df)).cwiseProduct(values.conjugate());
  return grid.integrate(integrand).real();
}

}  // namespace muskat
