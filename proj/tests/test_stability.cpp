#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "muskat/stability.hpp"

using namespace muskat;
using namespace helpers;

TEST_CASE("unperturbed RT function") {
  const SpectralGrid g(64);
  const RtProfile flat = rt_unperturbed(g, InterfaceState::flat(g));
  CHECK(flat.min() == doctest::Approx(-kTwoPi).epsilon(1e-14));
  CHECK(flat.max() == doctest::Approx(-kTwoPi).epsilon(1e-14));

  // dz1(0) = -1, dz2(0) = 0
  InterfaceState over = InterfaceState::flat(g);
  over.p1 = sine_mode(g, 1, -2.0);
  CHECK(rt_unperturbed(g, over).values[0] == doctest::Approx(kTwoPi).epsilon(1e-12));

  // dz1(0) = dz2(0) = 1
  InterfaceState slanted = InterfaceState::flat(g);
  slanted.p2 = sine_mode(g, 1, 1.0);
  CHECK(rt_unperturbed(g, slanted).values[0] == doctest::Approx(-kPi).epsilon(1e-12));

  const RealVector dz1 = values(g, derivative_coefficients(g, over.p1, 1)).array() + 1.0;
  const RealVector sigma = rt_unperturbed(g, over).values;
  for (Index i = 0; i < 64; ++i)
    if (std::abs(dz1[i]) > 1e-12) CHECK((sigma[i] > 0) == (dz1[i] < 0));

  InterfaceState cusp = InterfaceState::flat(g);
  cusp.p1 = sine_mode(g, 1, -1.0);
  CHECK_THROWS_AS(rt_unperturbed(g, cusp), DegenerateGeometry);
}

TEST_CASE("generalized RT function") {
  const SpectralGrid g(64);
  const InterfaceState flat = InterfaceState::flat(g);
  const LiftedContour c = LiftedContour::constant(g, 0.3);
  for (double s : {0.0, 1.0, kTwoPi + 1.0}) {
    const RtProfile p = rt_generalized(g, flat, c, RealVector::Constant(64, s));
    CHECK(p.min() == doctest::Approx(-kTwoPi + s).epsilon(1e-10));
    CHECK(p.max() == doctest::Approx(-kTwoPi + s).epsilon(1e-10));
  }

  InterfaceState s = InterfaceState::flat(g);
  s.p1 = sine_mode(g, 1, 0.1);
  s.p2 = cosine_mode(g, 1, 0.2) + sine_mode(g, 2, 0.05);
  const RealVector base = rt_unperturbed(g, s).values;
  const RealVector zero = RealVector::Zero(64);
  CHECK(max_abs(RealVector(rt_generalized(g, s, zero).values - base)) < 1e-10);

  std::vector<double> hs{1e-3, 2e-3, 4e-3, 8e-3};
  std::vector<double> err;
  for (double h : hs) err.push_back(max_abs(RealVector(rt_generalized(g, s, LiftedContour::constant(g, h), zero).values - base)));
  CHECK(err[0] < 1e-2);
  const double slope = std::log(err.back() / err.front()) / std::log(hs.back() / hs.front());
  MESSAGE("h -> 0 slope " << slope);
  CHECK(slope == doctest::Approx(1.0).epsilon(0.2));
}

TEST_CASE("turnover indicator") {
  const SpectralGrid g(128);
  CHECK(turnover_indicator(g, InterfaceState::flat(g)) == doctest::Approx(1.0));
  InterfaceState s = InterfaceState::flat(g);
  s.p1 = sine_mode(g, 1, 1.2);
  CHECK(turnover_indicator(g, s) == doctest::Approx(-0.2).epsilon(1e-12));
  s.p1 = sine_mode(g, 1, 0.5);
  CHECK(turnover_indicator(g, s) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("H4 distance") {
  const SpectralGrid g(64);
  const LiftedContour c = LiftedContour::constant(g, 0.2);
  InterfaceState a = InterfaceState::flat(g);
  a.p2 = cosine_mode(g, 2, 0.1);
  CHECK(h4_distance(g, a, a, c) == 0.0);
  CHECK(h4_distance(g, a, a) == 0.0);

  InterfaceState b = a;
  b.p2[0] += 0.1;
  CHECK(h4_distance(g, a, b) == doctest::Approx(0.1 * std::sqrt(4 * kPi)).epsilon(1e-12));
  CHECK(h4_distance(g, a, b, c) == doctest::Approx(0.1 * std::sqrt(4 * kPi)).epsilon(1e-12));

  const double eps = 1e-3;
  const double h = 0.2;
  const int k = 3;
  InterfaceState m = a;
  m.p2 += single_mode(g, k, eps);
  const double closed = eps * std::sqrt(kTwoPi * (1 + std::pow(k, 8)) * (std::exp(-2 * k * h) + std::exp(2 * k * h)));
  CHECK(h4_distance(g, a, m, c) == doctest::Approx(closed).epsilon(1e-8));

  std::mt19937 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    std::array<InterfaceState, 3> s;
    for (auto& x : s) x = InterfaceState::from_samples(g, random_smooth(g, rng, 0.8, 6), random_smooth(g, rng, 0.8, 6));
    CHECK(h4_distance(g, s[0], s[1], c) == h4_distance(g, s[1], s[0], c));
    CHECK(h4_distance(g, s[0], s[2], c) <= h4_distance(g, s[0], s[1], c) + h4_distance(g, s[1], s[2], c) + 1e-12);
  }
}
