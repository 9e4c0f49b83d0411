#pragma once

#include "mqnmr/core.hpp"
#include "mqnmr/spin_ops.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <vector>

namespace mqnmr {

// 2019 SI exact values.
inline constexpr double kDefaultHbar = 1.054571817e-34;  // J s
inline constexpr double kDefaultKb = 1.380649e-23;       // J / K

/// Field and temperature of the equilibrium state. Constants are carried
/// here rather than hardcoded at use sites.
struct PhysicalParams {
  double omega0 = 0.0;       // angular Larmor frequency, rad/s
  double temperature = 0.0;  // K
  double hbar = kDefaultHbar;
  double k_b = kDefaultKb;

  void validate() const {
    if (!(omega0 > 0.0)) throw std::invalid_argument("omega0 must be > 0");
    if (!(temperature > 0.0))
      throw std::invalid_argument("temperature must be > 0");
    if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be > 0");
    if (!(k_b > 0.0)) throw std::invalid_argument("k_b must be > 0");
  }
};

/// One internuclear vector relative to the external field.
struct DipolarGeometry {
  double gamma = 0.0;    // gyromagnetic ratio, rad s^-1 T^-1
  double r12 = 0.0;      // internuclear distance, m
  double theta12 = 0.0;  // angle between r12 and the field, rad
};

struct Coupling {
  std::size_t j = 0;
  std::size_t k = 0;
  double b = 0.0;  // rad/s
};

/// n spins with pairwise two-quantum coupling constants b_jk, j < k.
struct SpinSystem {
  std::size_t n = 0;
  std::vector<Coupling> couplings;

  static SpinSystem pair(double b) { return SpinSystem{2, {{0, 1, b}}}; }

  void validate() const {
    dimension_for(n);
    if (n == 2 && couplings.size() != 1)
      throw std::invalid_argument("a two-spin system has exactly one coupling");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& c : couplings) {
      if (c.j >= c.k) throw std::invalid_argument("coupling requires j < k");
      if (c.k >= n) throw std::invalid_argument("coupling index out of range");
      if (!seen.insert({c.j, c.k}).second)
        throw std::invalid_argument("duplicate coupling pair");
    }
  }
};

/// Dipolar coupling constant b = gamma^2 hbar (1 - 3 cos^2 theta) / (2 r^3).
/// Vanishes at the magic angle cos^2 theta = 1/3 and may be negative.
inline double dipolar_coupling(const DipolarGeometry& geom,
                               double hbar = kDefaultHbar) {
  if (!(geom.r12 > 0.0)) throw std::invalid_argument("r12 must be > 0");
  const double c = std::cos(geom.theta12);
  const double r3 = geom.r12 * geom.r12 * geom.r12;
  return geom.gamma * geom.gamma * hbar * (1.0 - 3.0 * c * c) / (2.0 * r3);
}

/// Dimensionless inverse temperature beta = hbar omega0 / (k_B T).
inline double beta_from(const PhysicalParams& p) {
  p.validate();
  return p.hbar * p.omega0 / (p.k_b * p.temperature);
}

/// Temperature below which the evolved pair can become entangled:
/// T_E = hbar omega0 / (k_B ln(1 + sqrt 2)), i.e. the T whose beta solves
/// sinh(beta) = 1.
inline double critical_temperature(const PhysicalParams& p) {
  if (!(p.omega0 > 0.0)) throw std::invalid_argument("omega0 must be > 0");
  return p.hbar * p.omega0 / (p.k_b * std::log1p(std::numbers::sqrt2));
}

/// Averaged two-quantum Hamiltonian: sum over coupled pairs of
/// b_jk (Ij+ Ik+ + Ij- Ik-). Connects only basis states with delta m = +-2.
inline ComplexMatrix build_h_mq(const SpinSystem& sys) {
  sys.validate();
  const std::size_t dim = dimension_for(sys.n);
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (const auto& c : sys.couplings) {
    const ComplexMatrix up = raising_lowering(c.j, Ladder::raising, sys.n) *
                             raising_lowering(c.k, Ladder::raising, sys.n);
    h += c.b * (up + up.adjoint());
  }
  return h;
}

/// The transformation diagonalizing the two-spin H_MQ in the standard basis.
/// Columns are the eigenvectors: U^dagger H_MQ U = diag(0, 0, b, -b).
inline ComplexMatrix hmq_eigenbasis_two_spin() {
  const double s = 1.0 / std::numbers::sqrt2;
  ComplexMatrix u(4, 4);
  u << 0, 0, s, s,
       1, 0, 0, 0,
       0, 1, 0, 0,
       0, 0, s, -s;
  return u;
}

}  // namespace mqnmr
