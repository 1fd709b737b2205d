#include <doctest.h>

#include <iomanip>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace muskat;
using namespace helpers;

namespace {

// z1 = alpha + sum a_k sin, z2 = sum b_k cos with strip width 0.3 decay
InterfaceState strip_state(const SpectralGrid& g) {
  InterfaceState s = InterfaceState::flat(g);
  for (Index k = 1; k < g.nyquist(); ++k) {
    const double w = std::exp(-0.3 * k);
    s.p1 += sine_mode(g, k, 0.05 * w);
    s.p2 += cosine_mode(g, k, 0.2 * w);
  }
  return s;
}

InterfaceState smooth_state(const SpectralGrid& g) {
  InterfaceState s = InterfaceState::flat(g);
  s.p1 = sine_mode(g, 1, 0.1) + cosine_mode(g, 2, 0.05);
  s.p2 = sine_mode(g, 1, 0.3) + cosine_mode(g, 3, 0.1);
  return s;
}

RealVector rhs_values(const SpectralGrid& g, const ComplexVector& c) { return g.inverse(c).real(); }

}  // namespace

TEST_CASE("kernel examples on the flat state") {
  const SpectralGrid g(64);
  const InterfaceState flat = InterfaceState::flat(g);
  CHECK(std::abs(kernel(g, flat, 32, 0)) < 1e-15);
  CHECK(kernel(g, flat, 16, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(kernel(g, flat, 3, 3), InvalidArgument);
  CHECK(muskat_kernel(kPi / 2, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("flat state is a fixed point") {
  const SpectralGrid g(128);
  const Tendency t = rhs(g, InterfaceState::flat(g));
  CHECK(max_abs(t.d1) < 1e-10);
  CHECK(max_abs(t.d2) < 1e-10);
}

TEST_CASE("vertical shift invariance") {
  const SpectralGrid g(128);
  const InterfaceState s = smooth_state(g);
  InterfaceState shifted = s;
  shifted.p2[0] += 0.37;
  const Tendency a = rhs(g, s);
  const Tendency b = rhs(g, shifted);
  CHECK(max_abs(ComplexVector(a.d1 - b.d1)) < 1e-12);
  CHECK(max_abs(ComplexVector(a.d2 - b.d2)) < 1e-12);
}

TEST_CASE("linearization about the flat state") {
  for (double x : {0.0, 0.7, 2.0}) CHECK(oracle::cot_sine_integral(x, 200000) == doctest::Approx(kTwoPi * std::cos(x)).epsilon(1e-8));

  const SpectralGrid g(128);
  const double eps = 1e-6;
  InterfaceState s = InterfaceState::flat(g);
  s.p2 = cosine_mode(g, 1, eps);
  const RealVector d2 = rhs_values(g, rhs(g, s).d2);
  const RealVector expected = (-kTwoPi * eps * g.nodes().array().cos()).matrix();
  CHECK((d2 - expected).cwiseAbs().maxCoeff() <= 1e-4 * expected.cwiseAbs().maxCoeff());

  for (int k : {1, 2, 3}) {
    s.p2 = cosine_mode(g, k, eps);
    const ComplexVector d = rhs(g, s).d2;
    CHECK(std::abs(d[k].real() / (0.5 * eps) + kTwoPi * k) <= 1e-4 * kTwoPi * k);
  }
}

TEST_CASE("alternating-point quadrature agrees with the diagonal-limit rule") {
  const SpectralGrid g(256);
  const InterfaceState s = smooth_state(g);
  const Tendency a = rhs(g, s);
  const Tendency b = rhs_alternating(g, s);
  CHECK(max_abs(ComplexVector(a.d1 - b.d1)) < 1e-6);
  CHECK(max_abs(ComplexVector(a.d2 - b.d2)) < 1e-6);
}

TEST_CASE("reality, oddness and translation covariance") {
  const SpectralGrid g(128);
  const InterfaceState s = smooth_state(g);
  const Tendency t = rhs(g, s);
  CHECK(is_conjugate_symmetric(g, t.d1, 1e-10));
  CHECK(is_conjugate_symmetric(g, t.d2, 1e-10));

  InterfaceState odd = InterfaceState::flat(g);
  odd.p1 = sine_mode(g, 1, 0.2) + sine_mode(g, 2, -0.05);
  odd.p2 = sine_mode(g, 1, 0.4) + sine_mode(g, 3, 0.1);
  const Tendency to = rhs(g, odd);
  for (const ComplexVector* c : {&to.d1, &to.d2}) {
    const RealVector v = rhs_values(g, *c);
    double worst = 0.0;
    for (Index j = 0; j < 128; ++j) worst = std::max(worst, std::abs(v[j] + v[(128 - j) % 128]));
    CHECK(worst < 1e-10);
  }

  // z~(alpha) = z(alpha - s) + (s, 0)
  const double shift = 0.3;
  InterfaceState moved = s;
  for (Index j = 0; j < 128; ++j) {
    const Complex phase = std::exp(Complex(0, -g.wavenumber(j) * shift));
    moved.p1[j] *= phase;
    moved.p2[j] *= phase;
  }
  const Tendency tm = rhs(g, moved);
  for (Index j = 0; j < 128; ++j) {
    const Complex phase = std::exp(Complex(0, -g.wavenumber(j) * shift));
    CHECK(std::abs(tm.d1[j] - t.d1[j] * phase) < 1e-10);
    CHECK(std::abs(tm.d2[j] - t.d2[j] * phase) < 1e-10);
  }
}

TEST_CASE("spectral self-convergence on a strip-analytic state") {
  auto diff = [](Index n) {
    const SpectralGrid g(n);
    const SpectralGrid g2(2 * n);
    const RealVector a = rhs_values(g, rhs(g, strip_state(g)).d2);
    const RealVector b = rhs_values(g2, rhs(g2, strip_state(g2)).d2);
    double worst = 0.0;
    for (Index j = 0; j < n; ++j) worst = std::max(worst, std::abs(a[j] - b[2 * j]));
    return worst;
  };
  const double e64 = diff(64);
  const double e128 = diff(128);
  const double e256 = diff(256);
  MESSAGE("self-convergence " << e64 << " " << e128 << " " << e256);
  CHECK(e64 / e128 >= 10.0);
  CHECK((e128 / e256 >= 10.0 || e256 < 1e-13));
}

TEST_CASE("worker count does not change the result") {
  const SpectralGrid g(128);
  const InterfaceState s = smooth_state(g);
  RhsOptions one;
  one.workers = 1;
  RhsOptions three;
  three.workers = 3;
  const Tendency a = rhs(g, s, one);
  const Tendency b = rhs(g, s, three);
  CHECK(a.d1 == b.d1);
  CHECK(a.d2 == b.d2);
}

TEST_CASE("a_tilde") {
  const SpectralGrid g(128);
  CHECK(max_abs(a_tilde(g, InterfaceState::flat(g))) < 1e-10);
  CHECK(max_abs(a_tilde(g, InterfaceState::flat(g), LiftedContour::constant(g, 0.2))) < 1e-10);

  InterfaceState s = InterfaceState::flat(g);
  s.p2 = sine_mode(g, 1, 0.1);
  const ComplexVector a = a_tilde(g, s);
  CHECK(max_abs(RealVector(a.imag())) < 1e-10);
  CHECK(max_abs(RealVector(a.real())) > 1e-6);
  CHECK(std::abs(a[0]) < 1e-10);

  InterfaceState odd = InterfaceState::flat(g);
  odd.p1 = sine_mode(g, 1, 0.2);
  odd.p2 = sine_mode(g, 1, 0.3) + sine_mode(g, 2, 0.1);
  CHECK(std::abs(a_tilde(g, odd)[0]) < 1e-10);
}

TEST_CASE("subtracted kernel limit matches the approach along the curve") {
  const Complex dz1(1.1, 0.2), dz2(0.4, -0.1), d2z1(0.3, 0.05), d2z2(-0.2, 0.1);
  const double t = 1e-4;
  // z(zeta) - z(zeta - t) from the second-order Taylor expansion
  const Complex z1 = dz1 * t - 0.5 * d2z1 * t * t;
  const Complex z2 = dz2 * t - 0.5 * d2z2 * t * t;
  const Complex residue = dz1 / (dz1 * dz1 + dz2 * dz2);
  const Complex value = std::sin(z1) / (std::cosh(z2) - std::cos(z1)) - residue / std::tan(0.5 * t);
  CHECK(std::abs(value - subtracted_kernel_limit(dz1, dz2, d2z1, d2z2)) < 1e-3);
}

TEST_CASE("chord-arc constant") {
  double oracle_min = HUGE_VAL;
  for (int j = 1; j <= 100000; ++j) {
    const double th = kPi * j / 100000.0;
    oracle_min = std::min(oracle_min, (1.0 - std::cos(th)) / (th * th));
  }
  const SpectralGrid g(128);
  const double flat = chord_arc_constant(g, InterfaceState::flat(g));
  CHECK(std::abs(flat - oracle_min) < 1e-4);
  CHECK(std::abs(flat - 2.0 / (kPi * kPi)) < 1e-4);

  // z1 odd with a second zero, z2 even: z(a) = z(-a) at the nonzero root
  const SpectralGrid g2(256);
  InterfaceState crossing = InterfaceState::flat(g2);
  crossing.p1 = sine_mode(g2, 1, 1.5);
  crossing.p2 = cosine_mode(g2, 1, 0.3);
  CHECK(chord_arc_constant(g2, crossing) < 1e-3);
  try {
    rhs(g2, crossing);
    FAIL("expected a degenerate-geometry error");
  } catch (const DegenerateGeometry& e) {
    CHECK(e.first() != e.second());
  }

  // frozen at its first measurement
  constexpr double kFrozenContour = 0.1659166489;
  const double lifted = chord_arc_constant(g, InterfaceState::flat(g), LiftedContour::constant(g, 0.2));
  MESSAGE("contour chord-arc " << std::setprecision(10) << lifted);
  CHECK(lifted > 0.0);
  CHECK(lifted <= flat * (1.0 + 1e-2));
  CHECK(lifted == doctest::Approx(kFrozenContour).epsilon(1e-6));
}
