#pragma once

#include <mqnmr/mqnmr.hpp>

#include <random>

namespace test_support {

using mqnmr::Complex;
using mqnmr::ComplexMatrix;

inline ComplexMatrix random_complex(std::size_t dim, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(dim, dim);
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = 0; q < dim; ++q)
      m(p, q) = Complex{gauss(rng), gauss(rng)};
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t dim, std::mt19937& rng) {
  const ComplexMatrix g = random_complex(dim, rng);
  return 0.5 * (g + g.adjoint());
}

inline mqnmr::DensityMatrix random_density(std::size_t dim, std::mt19937& rng) {
  const ComplexMatrix g = random_complex(dim, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace();
  return mqnmr::DensityMatrix(std::move(rho));
}

inline ComplexMatrix random_unitary(std::size_t dim, std::mt19937& rng) {
  const Eigen::HouseholderQR<ComplexMatrix> qr(random_complex(dim, rng));
  return qr.householderQ();
}

// Independent Kronecker product used to cross-check the lifted operators.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace test_support
