#pragma once

#include "mqnmr/core.hpp"
#include "mqnmr/evolve.hpp"

#include <cmath>
#include <map>

namespace mqnmr {

// Bound on |Im tr(rho_(n) rho_ht_(-n))|; a larger residue means the two
// matrices do not belong to the same pipeline.
inline constexpr double kTraceImagTol = 1e-10;

/// Coherence-order split of a matrix: entry (p, q) belongs to order
/// m_p - m_q. Orders absent from the map are identically zero, so the stored
/// components always sum back to the input exactly.
struct CoherenceComponents {
  std::size_t n_spins = 0;
  std::map<int, ComplexMatrix> by_order;

  ComplexMatrix component(int order) const {
    const auto it = by_order.find(order);
    if (it != by_order.end()) return it->second;
    const auto dim = static_cast<Eigen::Index>(dimension_for(n_spins));
    return ComplexMatrix::Zero(dim, dim);
  }

  ComplexMatrix reconstruct() const {
    const auto dim = static_cast<Eigen::Index>(dimension_for(n_spins));
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    for (const auto& [order, mat] : by_order) sum += mat;
    return sum;
  }
};

/// Partitions A by coherence order. Exhaustive and exclusive: every nonzero
/// entry lands in exactly one component.
inline CoherenceComponents decompose_by_order(const ComplexMatrix& a,
                                              std::size_t n_spins) {
  const std::size_t dim = dimension_for(n_spins);
  if (static_cast<std::size_t>(a.rows()) != dim ||
      static_cast<std::size_t>(a.cols()) != dim)
    throw std::invalid_argument("decompose_by_order: dimension mismatch");

  CoherenceComponents out{n_spins, {}};
  for (std::size_t p = 0; p < dim; ++p) {
    const int tm_p = twice_magnetization(p, n_spins);
    for (std::size_t q = 0; q < dim; ++q) {
      if (a(p, q) == 0.0) continue;
      const int order = (tm_p - twice_magnetization(q, n_spins)) / 2;
      auto [it, inserted] = out.by_order.try_emplace(
          order, ComplexMatrix::Zero(a.rows(), a.cols()));
      it->second(p, q) = a(p, q);
    }
  }
  return out;
}

namespace detail {

// Re tr(A B) with the imaginary residue gate; tr(AB) = sum_pq A_pq B_qp.
inline double overlap_trace(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Complex t = a.cwiseProduct(b.transpose()).sum();
  if (std::abs(t.imag()) >= kTraceImagTol)
    throw numeric_error(
        "intensity: imaginary trace residue exceeds 1e-10 (inconsistent inputs)");
  return t.real();
}

}  // namespace detail

/// Coherence intensity G_n = Re tr(rho_(n)(tau) rho_ht_(-n)(tau)).
inline double intensity(const DensityMatrix& rho_tau,
                        const ComplexMatrix& rho_ht_tau, int order) {
  if (static_cast<std::size_t>(rho_ht_tau.rows()) != rho_tau.dim() ||
      rho_ht_tau.rows() != rho_ht_tau.cols())
    throw std::invalid_argument("intensity: dimension mismatch");
  if (!is_hermitian(rho_ht_tau))
    throw std::invalid_argument("intensity: reference matrix is not Hermitian");
  const std::size_t n = rho_tau.n_spins();
  const auto state = decompose_by_order(rho_tau.matrix(), n);
  const auto ref = decompose_by_order(rho_ht_tau, n);
  return detail::overlap_trace(state.component(order), ref.component(-order));
}

/// Intensities for every order in [-n, n], explicit zeros included, plus the
/// (beta, tau) the profile was taken at.
struct CoherenceProfile {
  std::map<int, double> intensities;
  double beta = 0.0;
  double tau = 0.0;  // seconds

  double at(int order) const {
    const auto it = intensities.find(order);
    return it != intensities.end() ? it->second : 0.0;
  }

  /// The experimentally preferred observable: sum of the +-2 intensities.
  double g2_plus_gm2() const { return at(2) + at(-2); }

  double total() const {
    double sum = 0.0;
    for (const auto& [order, g] : intensities) sum += g;
    return sum;
  }

  /// Rescaled so the intensities sum to one. The unscaled profile keeps the
  /// reference-matrix normalization, whose total is tanh(beta/2) for the
  /// two-spin system.
  CoherenceProfile normalized() const {
    const double sum = total();
    if (sum == 0.0)
      throw std::invalid_argument("normalized: profile sums to zero");
    CoherenceProfile out = *this;
    for (auto& [order, g] : out.intensities) g /= sum;
    return out;
  }
};

/// Full numeric profile: decompose both matrices once and take every
/// order-n overlap.
inline CoherenceProfile intensity_profile(const DensityMatrix& rho_tau,
                                          const ComplexMatrix& rho_ht_tau,
                                          double beta, double tau) {
  if (static_cast<std::size_t>(rho_ht_tau.rows()) != rho_tau.dim() ||
      rho_ht_tau.rows() != rho_ht_tau.cols())
    throw std::invalid_argument("intensity_profile: dimension mismatch");
  if (!is_hermitian(rho_ht_tau))
    throw std::invalid_argument(
        "intensity_profile: reference matrix is not Hermitian");
  const std::size_t n = rho_tau.n_spins();
  const auto state = decompose_by_order(rho_tau.matrix(), n);
  const auto ref = decompose_by_order(rho_ht_tau, n);
  CoherenceProfile prof{{}, beta, tau};
  const int nn = static_cast<int>(n);
  for (int order = -nn; order <= nn; ++order)
    prof.intensities[order] =
        detail::overlap_trace(state.component(order), ref.component(-order));
  return prof;
}

/// Closed-form two-spin intensities: G0 = tanh(beta/2) cos^2(2 b tau),
/// G+-2 = tanh(beta/2) sin^2(2 b tau) / 2, all other orders zero.
inline CoherenceProfile analytic_intensities(double beta, double b,
                                             double tau) {
  const double t = std::tanh(0.5 * beta);
  const double c = std::cos(2.0 * b * tau);
  const double s = std::sin(2.0 * b * tau);
  CoherenceProfile prof{{}, beta, tau};
  prof.intensities[-2] = 0.5 * t * s * s;
  prof.intensities[-1] = 0.0;
  prof.intensities[0] = t * c * c;
  prof.intensities[1] = 0.0;
  prof.intensities[2] = 0.5 * t * s * s;
  return prof;
}

}  // namespace mqnmr
