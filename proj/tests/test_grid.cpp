#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace muskat;
using namespace helpers;

TEST_CASE("grid nodes are equispaced on [0, 2pi)") {
  const SpectralGrid g(64);
  CHECK(g.spacing() == doctest::Approx(kTwoPi / 64));
  CHECK(g.node(0) == 0.0);
  CHECK(g.nodes()[63] == doctest::Approx(kTwoPi * 63 / 64));
  CHECK(g.wavenumber(32) == 32);
  CHECK(g.wavenumber(33) == -31);
  CHECK_THROWS_AS(SpectralGrid(48), InvalidArgument);
  CHECK_THROWS_AS(SpectralGrid(2), InvalidArgument);
}

TEST_CASE("transform round trip") {
  std::mt19937 rng(1);
  for (Index n : {64, 128, 256, 512, 1024, 2048}) {
    const SpectralGrid g(n);
    const ComplexVector v = random_real(n, rng).cast<Complex>() + Complex(0, 1) * random_real(n, rng).cast<Complex>();
    const ComplexVector back = to_physical(g, to_spectral(g, GridFunction::physical(v))).data;
    CHECK((back - v).norm() / v.norm() < 1e-12);
  }
}

TEST_CASE("to_spectral examples") {
  const SpectralGrid g(32);
  const ComplexVector one = to_spectral(g, GridFunction::physical(RealVector(RealVector::Ones(32)))).data;
  CHECK(std::abs(one[0] - 1.0) < 1e-15);
  CHECK(max_abs(ComplexVector(one.tail(31))) < 1e-15);

  ComplexVector e(32);
  for (Index j = 0; j < 32; ++j) e[j] = std::exp(Complex(0, g.node(j)));
  const ComplexVector c = to_spectral(g, GridFunction::physical(e)).data;
  CHECK(std::abs(c[1] - 1.0) < 1e-14);
  CHECK((c - single_mode(g, 1)).cwiseAbs().maxCoeff() < 1e-14);

  std::mt19937 rng(2);
  const RealVector r = random_real(32, rng);
  const ComplexVector cr = to_spectral(g, GridFunction::physical(r)).data;
  CHECK(cr.squaredNorm() == doctest::Approx(r.squaredNorm() / 32).epsilon(1e-12));

  CHECK_THROWS_AS(to_spectral(g, GridFunction::physical(RealVector(RealVector::Ones(16)))), SizeMismatch);
}

TEST_CASE("project_n") {
  const SpectralGrid g(32);
  CHECK(max_abs(project_n(g, GridFunction::spectral(single_mode(g, 5)), 4).data) == 0.0);
  CHECK(max_abs(ComplexVector(project_n(g, GridFunction::spectral(single_mode(g, 3)), 4).data - single_mode(g, 3))) ==
        0.0);
  std::mt19937 rng(3);
  const GridFunction r = GridFunction::physical(random_real(32, rng));
  const GridFunction once = project_n(g, r, 7);
  const GridFunction twice = project_n(g, once, 7);
  CHECK((once.data - twice.data).norm() < 1e-14);
  CHECK_THROWS_AS(project_n(g, r, 17), InvalidCutoff);
}

TEST_CASE("derivative examples") {
  const SpectralGrid g(32);
  const RealVector x = g.nodes();
  const RealVector cosx = x.array().cos();
  const ComplexVector d = derivative(g, GridFunction::physical(cosx), 1).data;
  CHECK((d.real() + RealVector(x.array().sin())).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(max_abs(d.imag()) < 1e-14);

  const ComplexVector d4 = derivative(g, GridFunction::spectral(single_mode(g, 2)), 4).data;
  CHECK(std::abs(d4[2] - 16.0) < 1e-12);

  const ComplexVector d0 = derivative(g, GridFunction::physical(RealVector(RealVector::Constant(32, 3.0))), 1).data;
  CHECK(max_abs(d0) < 1e-14);
  CHECK_THROWS_AS(derivative(g, GridFunction::physical(cosx), 9), InvalidArgument);

  // the Nyquist mode is dropped by every derivative
  CHECK(derivative(g, GridFunction::spectral(single_mode(g, 16)), 2).data[16] == Complex(0.0));
}

TEST_CASE("lambda_op and hilbert examples") {
  const SpectralGrid g(64);
  const RealVector x = g.nodes();
  const RealVector c3 = (3 * x.array()).cos();
  const ComplexVector l = lambda_op(g, GridFunction::physical(c3)).data;
  CHECK((l.real() - 3.0 * c3).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(max_abs(lambda_op(g, GridFunction::physical(RealVector(RealVector::Constant(64, 2.0)))).data) < 1e-14);

  ComplexVector ce(64);
  for (Index j = 0; j < 64; ++j) ce[j] = std::exp(-std::abs(static_cast<double>(g.wavenumber(j))));
  const ComplexVector lc = lambda_op(g, GridFunction::spectral(ce)).data;
  for (Index j = 0; j < 64; ++j) CHECK(std::abs(lc[j] - std::abs(double(g.wavenumber(j))) * ce[j]) < 1e-15);

  const ComplexVector hc = hilbert(g, GridFunction::physical(RealVector(x.array().cos()))).data;
  CHECK((hc.real() - RealVector(x.array().sin())).cwiseAbs().maxCoeff() < 1e-13);
  const ComplexVector hs = hilbert(g, GridFunction::physical(RealVector(x.array().sin()))).data;
  CHECK((hs.real() + RealVector(x.array().cos())).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("Lambda equals d/dx composed with the Hilbert transform") {
  std::mt19937 rng(4);
  const SpectralGrid g(256);
  ComplexVector fc = g.forward(random_real(256, rng).cast<Complex>());
  fc[g.nyquist()] = 0.0;  // derivatives drop the Nyquist mode
  const GridFunction f = GridFunction::spectral(fc);
  const ComplexVector lam = lambda_op(g, f).data;
  const ComplexVector hd = hilbert(g, derivative(g, f, 1)).data;
  // i D H with D = (1/i) d/dx
  const ComplexVector idh =
      Complex(0, 1) * (Complex(0, -1) * derivative(g, hilbert(g, f), 1).data);
  CHECK((lam - hd).cwiseAbs().maxCoeff() < 1e-10 * lam.cwiseAbs().maxCoeff());
  CHECK((lam - idh).cwiseAbs().maxCoeff() < 1e-10 * lam.cwiseAbs().maxCoeff());
}

TEST_CASE("Lambda is positive semidefinite on real functions") {
  std::mt19937 rng(5);
  const SpectralGrid g(128);
  for (int trial = 0; trial < 20; ++trial) {
    const RealVector f = random_real(128, rng);
    const ComplexVector lf = lambda_op(g, GridFunction::physical(f)).data;
    CHECK(g.integrate(RealVector(f.cwiseProduct(lf.real()))) >= -1e-10);
  }
}

TEST_CASE("quadratic form identity against the csc^2 double integral") {
  const SpectralGrid g(1024);
  const RealVector x = g.nodes();
  auto check = [&](const RealVector& f) {
    const RealVector df = derivative(g, GridFunction::physical(f), 1).data.real();
    const RealVector lf = lambda_op(g, GridFunction::physical(f)).data.real();
    const double lhs = g.integrate(RealVector(f.cwiseProduct(lf)));
    const double rhs = oracle::quadratic_form_double_integral(f, df);
    CHECK(std::abs(lhs - rhs) <= 1e-6 * std::abs(rhs));
    return lhs;
  };
  CHECK(check(x.array().cos()) == doctest::Approx(kPi).epsilon(1e-10));
  std::mt19937 rng(6);
  for (int trial = 0; trial < 2; ++trial) check(random_smooth(g, rng, 0.4, 20));
}

TEST_CASE("projection commutes with derivative and Lambda") {
  std::mt19937 rng(7);
  const SpectralGrid g(64);
  const GridFunction f = GridFunction::physical(random_real(64, rng));
  const ComplexVector a = project_n(g, derivative(g, f, 2), 10).data;
  const ComplexVector b = derivative(g, project_n(g, f, 10), 2).data;
  CHECK((a - b).norm() < 1e-10);
  const ComplexVector c = project_n(g, lambda_op(g, f), 10).data;
  const ComplexVector d = lambda_op(g, project_n(g, f, 10)).data;
  CHECK((c - d).norm() < 1e-10);
}

TEST_CASE("analyticity radius examples") {
  {
    const SpectralGrid g(256);
    ComplexVector c(256);
    for (Index j = 0; j < 256; ++j) c[j] = std::exp(-0.3 * std::abs(double(g.wavenumber(j))));
    CHECK(analyticity_radius(g, GridFunction::spectral(c), FitBand{8, 64}) == doctest::Approx(0.3).epsilon(1e-6));
  }
  {
    const SpectralGrid g(256);
    ComplexVector c = ComplexVector::Zero(256);
    for (Index k = 1; k < 128; ++k) c[g.index_of(k)] = c[g.index_of(-k)] = std::exp(-0.1 * k) / std::pow(k, 5);
    CHECK(std::abs(analyticity_radius(g, GridFunction::spectral(c), FitBand{16, 96}) - 0.1) <= 0.02);
  }
  {
    const SpectralGrid g(512);
    ComplexVector c = ComplexVector::Zero(512);
    for (Index k = 1; k < 256; ++k) c[g.index_of(k)] = c[g.index_of(-k)] = 1.0 / std::pow(k, 5);
    CHECK(analyticity_radius(g, GridFunction::spectral(c)) <= 0.02);
  }
  const SpectralGrid g(64);
  CHECK_THROWS_AS(analyticity_radius(g, GridFunction::spectral(ComplexVector::Zero(64))), UndefinedRadius);
  CHECK_THROWS_AS(analyticity_radius(g, GridFunction::spectral(single_mode(g, 1))), UndefinedRadius);
}

TEST_CASE("conjugate symmetry and series evaluation") {
  std::mt19937 rng(8);
  const SpectralGrid g(32);
  ComplexVector c = g.forward(random_real(32, rng).cast<Complex>());
  c[g.nyquist()] = 0.0;
  CHECK(is_conjugate_symmetric(g, c, 1e-12));
  ComplexVector broken = c;
  broken[3] += Complex(0.0, 0.1);
  CHECK_FALSE(is_conjugate_symmetric(g, broken, 1e-12));
  CHECK(is_conjugate_symmetric(g, symmetrize(g, broken), 1e-14));

  const ComplexVector at_nodes = evaluate_series(g, c, g.nodes().cast<Complex>());
  CHECK((at_nodes - g.inverse(c)).cwiseAbs().maxCoeff() < 1e-12);
  const ComplexVector d2 = evaluate_series(g, c, g.nodes().cast<Complex>(), 2);
  CHECK((d2 - g.inverse(derivative_coefficients(g, c, 2))).cwiseAbs().maxCoeff() < 1e-10);
  // e^{ik zeta} at zeta = x + i y picks up e^{-k y}
  const ComplexVector p = ComplexVector::Constant(1, Complex(0.3, 0.2));
  CHECK(std::abs(evaluate_series(g, single_mode(g, 3), p)[0] - std::exp(Complex(0, 3) * p[0])) < 1e-14);
}
