#pragma once

#include <Eigen/Dense>

#include <bit>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace mqnmr {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Dense storage throughout; 2^12 = 4096 is the largest supported dimension.
inline constexpr std::size_t kMaxSpins = 12;

/// Thrown when a computed quantity violates a numeric-residue bound
/// (non-Hermitian state, negative eigenvalue beyond the round-off floor,
/// imaginary trace residue). Signals inconsistent inputs, not a usage error.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline double& matrix_tolerance_storage() {
  static double tol = 1e-12;
  return tol;
}
}  // namespace detail

/// Absolute tolerance used by matrix equality and state-validity checks.
inline double matrix_tolerance() { return detail::matrix_tolerance_storage(); }

/// Replaces the default 1e-12 tolerance. Set once at startup (the CLI wires
/// the MQNMR_TOLERANCE environment variable here); not synchronized.
inline void set_matrix_tolerance(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("matrix tolerance must be > 0");
  detail::matrix_tolerance_storage() = tol;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

inline bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                         double tol = matrix_tolerance()) {
  return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) <= tol;
}

inline bool is_hermitian(const ComplexMatrix& a, double tol = matrix_tolerance()) {
  return a.rows() == a.cols() && max_abs_diff(a, a.adjoint()) <= tol;
}

/// Hilbert-space dimension 2^n; n must be in [1, 12].
inline std::size_t dimension_for(std::size_t n_spins) {
  if (n_spins < 1 || n_spins > kMaxSpins)
    throw std::invalid_argument("spin count must be in [1, 12]");
  return std::size_t{1} << n_spins;
}

/// Spin count n for a dimension that must be a power of two in [2, 4096].
inline std::size_t spin_count_for(std::size_t dim) {
  if (dim < 2 || dim > (std::size_t{1} << kMaxSpins) || !std::has_single_bit(dim))
    throw std::invalid_argument("dimension must be a power of two in [2, 4096]");
  return static_cast<std::size_t>(std::bit_width(dim)) - 1;
}

// Basis conventions: basis index p spells the spin word with site 0 as the
// most significant bit, and bit value 0 is the m = +1/2 state (aligned with
// the field). For n = 2 the order is {|00>, |01>, |10>, |11>}.

inline bool site_bit(std::size_t index, std::size_t site, std::size_t n_spins) {
  return (index >> (n_spins - 1 - site)) & std::size_t{1};
}

/// 2m for basis state `index` (kept integral to stay exact).
inline int twice_magnetization(std::size_t index, std::size_t n_spins) {
  return static_cast<int>(n_spins) - 2 * std::popcount(index);
}

inline double magnetization(std::size_t index, std::size_t n_spins) {
  return 0.5 * twice_magnetization(index, n_spins);
}

/// A computational basis state: bit word plus total magnetization.
struct BasisLabel {
  std::size_t bits = 0;  // site 0 = MSB; bit 0 <-> m_site = +1/2
  std::size_t n_spins = 0;
  double m = 0.0;  // sum over sites of +-1/2
};

inline BasisLabel basis_label(std::size_t index, std::size_t n_spins) {
  if (index >= dimension_for(n_spins))
    throw std::invalid_argument("basis index out of range");
  return BasisLabel{index, n_spins, magnetization(index, n_spins)};
}

}  // namespace mqnmr
