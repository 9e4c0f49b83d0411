#pragma once

#include "mqnmr/core.hpp"
#include "mqnmr/model.hpp"
#include "mqnmr/spin_ops.hpp"

#include <cmath>
#include <utility>

namespace mqnmr {

// Eigenvalues of a nominally positive semidefinite state may dip below zero
// by round-off; anything under this floor is treated as a real defect.
inline constexpr double kPsdFloor = -1e-10;

/// Unit-trace Hermitian positive-semidefinite matrix over a 2^n space.
/// Validated on construction: Hermitian and unit trace within
/// matrix_tolerance(), eigenvalues >= -1e-10.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
    validate();
  }

  const ComplexMatrix& matrix() const { return mat_; }
  std::size_t dim() const { return static_cast<std::size_t>(mat_.rows()); }
  std::size_t n_spins() const { return spin_count_for(dim()); }

 private:
  void validate() const {
    spin_count_for(static_cast<std::size_t>(mat_.rows()));
    const double tol = matrix_tolerance();
    if (!is_hermitian(mat_, tol))
      throw numeric_error("density matrix is not Hermitian within tolerance");
    if (std::abs(mat_.trace() - Complex{1.0}) > tol)
      throw numeric_error("density matrix trace differs from 1");
    const Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(
        mat_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < kPsdFloor)
      throw numeric_error(
          "density matrix has a negative eigenvalue beyond the round-off floor");
  }

  ComplexMatrix mat_;
};

/// Eigen pairs of a Hermitian matrix: real eigenvalues ascending,
/// orthonormal eigenvectors in columns. Reusable read-only across many
/// evolution times.
struct SpectralDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  std::size_t dim() const {
    return static_cast<std::size_t>(eigenvalues.size());
  }
};

inline SpectralDecomposition hermitian_eigendecompose(const ComplexMatrix& h) {
  if (!is_hermitian(h))
    throw std::invalid_argument(
        "hermitian_eigendecompose: input is not Hermitian within tolerance");
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success)
    throw numeric_error("eigendecomposition did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

/// exp(-i H tau) assembled from the spectral decomposition of H. Exactly
/// unitary up to round-off, for any tau.
inline ComplexMatrix propagator(const SpectralDecomposition& sd, double tau) {
  ComplexVector phases(sd.eigenvalues.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i)
    phases(i) = std::exp(Complex{0.0, -sd.eigenvalues(i) * tau});
  return sd.eigenvectors * phases.asDiagonal() * sd.eigenvectors.adjoint();
}

/// exp(-i H tau) A exp(+i H tau).
inline ComplexMatrix conjugate_by_propagator(const ComplexMatrix& a,
                                             const SpectralDecomposition& sd,
                                             double tau) {
  if (static_cast<std::size_t>(a.rows()) != sd.dim() || a.rows() != a.cols())
    throw std::invalid_argument("conjugate_by_propagator: dimension mismatch");
  const ComplexMatrix u = propagator(sd, tau);
  return u * a * u.adjoint();
}

/// Thermal equilibrium state exp(beta I_z) / Z: diagonal with entries
/// exp(beta m_p) / Z. Exponents are shifted by their maximum before
/// normalization so large |beta| cannot overflow.
inline DensityMatrix thermal_state(double beta, std::size_t n_spins) {
  const std::size_t dim = dimension_for(n_spins);
  const double shift = std::abs(beta) * 0.5 * static_cast<double>(n_spins);
  RealVector weights(dim);
  for (std::size_t p = 0; p < dim; ++p)
    weights(p) = std::exp(beta * magnetization(p, n_spins) - shift);
  weights /= weights.sum();
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  for (std::size_t p = 0; p < dim; ++p) rho(p, p) = weights(p);
  return DensityMatrix(std::move(rho));
}

/// Unitary evolution rho(tau) = exp(-i H tau) rho0 exp(+i H tau), with the
/// propagator built from a precomputed decomposition of H.
inline DensityMatrix evolve(const DensityMatrix& rho0,
                            const SpectralDecomposition& sd, double tau) {
  if (rho0.dim() != sd.dim())
    throw std::invalid_argument("evolve: dimension mismatch");
  return DensityMatrix(conjugate_by_propagator(rho0.matrix(), sd, tau));
}

inline DensityMatrix evolve(const DensityMatrix& rho0, const ComplexMatrix& h,
                            double tau) {
  if (static_cast<std::size_t>(h.rows()) != rho0.dim())
    throw std::invalid_argument("evolve: dimension mismatch");
  return evolve(rho0, hermitian_eigendecompose(h), tau);
}

/// Closed-form two-spin rho(tau) for the thermal pair under the two-quantum
/// Hamiltonian: the {|00>,|11>} block rotates with phase 2 b tau, the
/// single-flip block stays 1/Z. Serves as the analytic oracle for evolve.
inline DensityMatrix analytic_rho_two_spin(double beta, double b, double tau) {
  const double z = 2.0 * (1.0 + std::cosh(beta));
  const double ch = std::cosh(beta);
  const double sh = std::sinh(beta);
  const double c = std::cos(2.0 * b * tau);
  const double s = std::sin(2.0 * b * tau);
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = (ch + c * sh) / z;
  m(1, 1) = 1.0 / z;
  m(2, 2) = 1.0 / z;
  m(3, 3) = (ch - c * sh) / z;
  m(0, 3) = Complex{0.0, s * sh / z};
  m(3, 0) = Complex{0.0, -s * sh / z};
  return DensityMatrix(std::move(m));
}

/// High-temperature reference matrix exp(-i H tau) I_z exp(+i H tau):
/// Hermitian and traceless; equals total I_z at tau = 0.
inline ComplexMatrix ht_reference(const SpectralDecomposition& sd, double tau,
                                  std::size_t n_spins) {
  if (sd.dim() != dimension_for(n_spins))
    throw std::invalid_argument("ht_reference: dimension mismatch");
  return conjugate_by_propagator(total_iz(n_spins), sd, tau);
}

inline ComplexMatrix ht_reference(const ComplexMatrix& h, double tau,
                                  std::size_t n_spins) {
  if (static_cast<std::size_t>(h.rows()) != dimension_for(n_spins))
    throw std::invalid_argument("ht_reference: dimension mismatch");
  return ht_reference(hermitian_eigendecompose(h), tau, n_spins);
}

}  // namespace mqnmr
