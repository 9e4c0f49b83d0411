#pragma once

#include "mqnmr/core.hpp"
#include "mqnmr/evolve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>

namespace mqnmr {

/// Wootters analysis of a two-spin state. The lambdas are sorted descending;
/// concurrence = max(0, l1 - l2 - l3 - l4). The witness value needs the
/// coherence context (beta and G2 + G-2) on top of the state, so it is only
/// present when the caller supplies that context.
struct EntanglementReport {
  std::array<double, 4> lambdas{};
  double concurrence = 0.0;
  std::optional<double> witness;
  bool entangled = false;
};

/// Spin-flip companion state (sigma_y x sigma_y) rho^* (sigma_y x sigma_y),
/// conjugation taken in the standard basis. An involution.
inline ComplexMatrix spin_flip(const DensityMatrix& rho) {
  if (rho.dim() != 4)
    throw std::invalid_argument("spin_flip: two-spin density matrix required");
  // sigma_y x sigma_y is the real antidiagonal (-1, 1, 1, -1).
  ComplexMatrix yy = ComplexMatrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  return yy * rho.matrix().conjugate() * yy;
}

namespace detail {

/// PSD square root by eigendecomposition. Eigenvalues in [-1e-10, 0) clamp
/// to zero; anything below the floor raises. Positive residues under the
/// relative rank floor clamp as well: the square root would otherwise turn
/// O(1e-16) round-off of a rank-deficient state into O(1e-8) entries.
inline ComplexMatrix psd_sqrt(const ComplexMatrix& m, const char* what) {
  constexpr double kRankFloor = 1e-13;  // relative to the top eigenvalue
  auto sd = hermitian_eigendecompose(m);
  RealVector lam = sd.eigenvalues;
  const double noise = kRankFloor * std::abs(lam(lam.size() - 1));
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) < kPsdFloor)
      throw numeric_error(std::string(what) +
                          ": negative eigenvalue beyond the round-off floor");
    lam(i) = lam(i) <= noise ? 0.0 : std::sqrt(lam(i));
  }
  return sd.eigenvectors * lam.cast<Complex>().asDiagonal() *
         sd.eigenvectors.adjoint();
}

}  // namespace detail

/// Wootters concurrence of a two-spin state. The lambdas (square roots of
/// the eigenvalues of rho rho~) are computed as the singular values of
/// sqrt(rho) sqrt(rho~) — identical to the eigenvalues of the Hermitian
/// sqrt(rho) rho~ sqrt(rho), but without squaring the round-off of
/// rank-deficient states.
inline EntanglementReport concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4)
    throw std::invalid_argument("concurrence: two-spin density matrix required");
  const ComplexMatrix root_rho = detail::psd_sqrt(rho.matrix(), "concurrence");
  const ComplexMatrix root_flip =
      detail::psd_sqrt(spin_flip(rho), "concurrence (spin-flip)");
  const Eigen::JacobiSVD<ComplexMatrix> svd(root_rho * root_flip);
  const RealVector& sv = svd.singularValues();  // descending

  EntanglementReport rep;
  for (int i = 0; i < 4; ++i) rep.lambdas[static_cast<std::size_t>(i)] = sv(i);
  const double raw =
      rep.lambdas[0] - rep.lambdas[1] - rep.lambdas[2] - rep.lambdas[3];
  rep.concurrence = std::max(0.0, raw);
  rep.entangled = rep.concurrence > 0.0;
  return rep;
}

/// Closed-form lambdas of the evolved thermal pair, sorted descending:
/// (sqrt(1 + sin^2(2 b tau) sinh^2 beta) +- |sin(2 b tau)| sinh beta) and a
/// twofold 1, all over 4 cosh^2(beta/2).
inline std::array<double, 4> analytic_lambdas(double beta, double b,
                                              double tau) {
  const double s = std::abs(std::sin(2.0 * b * tau));
  const double sh = std::sinh(beta);
  const double ch_half = std::cosh(0.5 * beta);
  const double denom = 4.0 * ch_half * ch_half;
  const double root = std::sqrt(1.0 + s * s * sh * sh);
  std::array<double, 4> lam{(root + s * sh) / denom, (root - s * sh) / denom,
                            1.0 / denom, 1.0 / denom};
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return lam;
}

/// Raw closed-form concurrence (|sin(2 b tau)| sinh beta - 1) /
/// (2 cosh^2(beta/2)); negative throughout the separable regime.
inline double analytic_concurrence_unclamped(double beta, double b,
                                             double tau) {
  const double s = std::abs(std::sin(2.0 * b * tau));
  const double ch_half = std::cosh(0.5 * beta);
  return (s * std::sinh(beta) - 1.0) / (2.0 * ch_half * ch_half);
}

inline double analytic_concurrence(double beta, double b, double tau) {
  return std::max(0.0, analytic_concurrence_unclamped(beta, b, tau));
}

/// Concurrence recovered from the measured coherences:
/// sqrt(tanh(beta/2) [G2 + G-2]) - 1 / (2 cosh^2(beta/2)), clamped at zero.
/// The intensity must lie in the feasible range [0, tanh(beta/2)].
inline double concurrence_from_coherences(double beta, double g2_plus_gm2) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be > 0");
  const double cap = std::tanh(0.5 * beta);
  constexpr double slack = 1e-12;  // round-off from the numeric pipeline
  if (!(g2_plus_gm2 >= -slack && g2_plus_gm2 <= cap + slack))
    throw std::invalid_argument(
        "intensity outside the feasible range [0, tanh(beta/2)]");
  const double g = std::clamp(g2_plus_gm2, 0.0, cap);
  const double ch_half = std::cosh(0.5 * beta);
  return std::max(0.0, std::sqrt(cap * g) - 1.0 / (2.0 * ch_half * ch_half));
}

/// Entanglement witness built on the +-2 coherence intensities:
/// EW = 1 / (2 sinh beta cosh^2(beta/2)) - (G2 + G-2). Positive on the
/// initial separable state; its sign flips exactly where the evolved pair
/// becomes entangled.
inline double entanglement_witness(double beta, double g2_plus_gm2) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be > 0");
  const double ch_half = std::cosh(0.5 * beta);
  return 1.0 / (2.0 * std::sinh(beta) * ch_half * ch_half) - g2_plus_gm2;
}

/// Reduced two-spin state over the `keep` pair of sites; keep.first becomes
/// the most significant bit of the reduced basis.
inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   std::pair<std::size_t, std::size_t> keep,
                                   std::size_t n_spins) {
  const std::size_t dim = dimension_for(n_spins);
  if (rho.dim() != dim)
    throw std::invalid_argument("partial_trace: dimension mismatch");
  if (n_spins < 2) throw std::invalid_argument("partial_trace: need n >= 2");
  if (keep.first == keep.second || keep.first >= n_spins ||
      keep.second >= n_spins)
    throw std::invalid_argument("partial_trace: invalid site pair");

  const auto bit_shift = [n_spins](std::size_t site) {
    return n_spins - 1 - site;
  };
  // Scatter the traced-site counter bits into every position not kept.
  const auto env_index = [&](std::size_t env) {
    std::size_t idx = 0;
    for (std::size_t site = 0; site < n_spins; ++site) {
      if (site == keep.first || site == keep.second) continue;
      idx |= (env & 1) << bit_shift(site);
      env >>= 1;
    }
    return idx;
  };

  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  const std::size_t env_count = dim / 4;
  for (std::size_t env = 0; env < env_count; ++env) {
    const std::size_t base = env_index(env);
    for (std::size_t a = 0; a < 4; ++a) {
      const std::size_t row = base | ((a >> 1) << bit_shift(keep.first)) |
                              ((a & 1) << bit_shift(keep.second));
      for (std::size_t b = 0; b < 4; ++b) {
        const std::size_t col = base | ((b >> 1) << bit_shift(keep.first)) |
                                ((b & 1) << bit_shift(keep.second));
        out(a, b) += rho.matrix()(row, col);
      }
    }
  }
  return DensityMatrix(std::move(out));
}

}  // namespace mqnmr
