#include <cmath>

#include "muskat/muskat.hpp"
#include "muskat/parallel.hpp"

namespace muskat {

namespace {

// jets[m] holds d^m z / dx^m at the nodes for m = 1..6
using Jets = std::array<RealVector, 7>;

Jets curve_jets(const SpectralGrid& grid, const ComplexVector& coeffs, bool add_identity) {
  Jets j;
  j[0] = grid.inverse(coeffs).real();
  for (int m = 1; m <= 6; ++m) j[m] = grid.inverse(derivative_coefficients(grid, coeffs, m)).real();
  if (add_identity) {
    j[0] += grid.nodes();
    j[1].array() += 1.0;
  }
  return j;
}

}  // namespace

D4Decomposition rhs_d4_decomposition(const SpectralGrid& grid, const InterfaceState& state, const RhsOptions& options) {
  const Index n = grid.size();
  const Tendency t = rhs(grid, state, options);
  const std::array<Jets, 2> z{curve_jets(grid, state.p1, true), curve_jets(grid, state.p2, false)};
  const std::array<ComplexVector, 2> tendency{t.d1, t.d2};

  D4Decomposition out;
  for (int mu = 0; mu < 2; ++mu) {
    auto& c = out.component[mu];
    c.total = grid.inverse(derivative_coefficients(grid, tendency[mu], 4)).real();
    c.dangerous.resize(n);
    for (auto& s : c.safe) s.resize(n);
  }

  const auto& z1 = z[0];
  const auto& z2 = z[1];
  parallel_for(n, worker_count(options.workers), [&](Index i) {
    std::array<double, 2> dangerous{0.0, 0.0};
    std::array<std::array<double, 6>, 2> safe{};
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      const double s1 = z1[0][i] - z1[0][j];
      const double s2 = z2[0][i] - z2[0][j];
      const double sn = std::sin(s1);
      const double cs = std::cos(s1);
      const double sh = std::sinh(s2);
      const double den = std::cosh(s2) - cs;
      const double dist = torus_distance(grid.node(i) - grid.node(j));
      if (std::abs(den) < options.chord_arc_floor * dist * dist)
        throw DegenerateGeometry("chord-arc condition fails", i, j);
      const double k = sn / den;
      const double den2 = den * den;
      const double d1z1 = z1[1][i] - z1[1][j];
      const double d1z2 = z2[1][i] - z2[1][j];
      const double d4z1 = z1[4][i] - z1[4][j];
      const double d4z2 = z2[4][i] - z2[4][j];
      for (int mu = 0; mu < 2; ++mu) {
        const auto& zm = z[mu];
        const double d1 = zm[1][i] - zm[1][j];
        const double d4 = zm[4][i] - zm[4][j];
        dangerous[mu] += k * (zm[5][i] - zm[5][j]);
        safe[mu][0] += d1z1 * cs / den * d4;
        safe[mu][1] += d1z2 * sh * sn / den2 * d4;
        safe[mu][2] += d1z1 * sn * sn / den2 * d4;
        safe[mu][3] += d1 * cs / den * d4z1;
        safe[mu][4] += d1 * sn * sh / den2 * d4z2;
        safe[mu][5] += d1 * sn * sn / den2 * d4z1;
      }
    }
    const double a = z1[1][i];
    const double b = z2[1][i];
    const double norm = a * a + b * b;
    const double norm2 = norm * norm;
    for (int mu = 0; mu < 2; ++mu) {
      const auto& zm = z[mu];
      dangerous[mu] += 2.0 * a * zm[6][i] / norm;
      safe[mu][0] += 2.0 * z1[2][i] * zm[5][i] / norm;
      safe[mu][1] += 4.0 * z2[2][i] * b * a * zm[5][i] / norm2;
      safe[mu][2] += 4.0 * z1[2][i] * a * a * zm[5][i] / norm2;
      safe[mu][3] += 2.0 * zm[2][i] * z1[5][i] / norm;
      safe[mu][4] += 4.0 * zm[2][i] * a * b * z2[5][i] / norm2;
      safe[mu][5] += 4.0 * zm[2][i] * a * a * z1[5][i] / norm2;

      const double scale = options.density_jump_over_2pi * grid.spacing();
      auto& c = out.component[mu];
      c.dangerous[i] = scale * dangerous[mu];
      for (int q = 0; q < 6; ++q) c.safe[q][i] = scale * kSafeCoefficients[q] * safe[mu][q];
    }
  });

  for (auto& c : out.component) {
    c.easy = c.total - c.dangerous;
    for (const auto& s : c.safe) c.easy -= s;
  }
  return out;
}

}  // namespace muskat
