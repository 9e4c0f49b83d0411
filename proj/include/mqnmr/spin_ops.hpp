#pragma once

#include "mqnmr/core.hpp"

namespace mqnmr {

enum class Axis { x, y, z };
enum class Ladder { raising, lowering };

/// Standard 2x2 Pauli matrix.
inline ComplexMatrix pauli(Axis axis) {
  ComplexMatrix s(2, 2);
  switch (axis) {
    case Axis::x:
      s << 0, 1, 1, 0;
      break;
    case Axis::y:
      s << 0, Complex{0, -1}, Complex{0, 1}, 0;
      break;
    case Axis::z:
      s << 1, 0, 0, -1;
      break;
  }
  return s;
}

/// Single-site angular momentum component I_alpha = sigma_alpha / 2.
inline ComplexMatrix spin_component(Axis axis) { return 0.5 * pauli(axis); }

/// Single-site ladder operator I+- = I_x +- i I_y: raising maps |1> to |0>.
inline ComplexMatrix ladder(Ladder which) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  if (which == Ladder::raising)
    m(0, 1) = 1.0;
  else
    m(1, 0) = 1.0;
  return m;
}

/// Lifts a 2x2 operator to the n-spin space: identity on every site except
/// `site`. Site 0 is the most significant bit of the basis index.
inline ComplexMatrix site_operator(std::size_t site, const ComplexMatrix& op,
                                   std::size_t n_spins) {
  const std::size_t dim = dimension_for(n_spins);
  if (site >= n_spins)
    throw std::invalid_argument("site_operator: site out of range");
  if (op.rows() != 2 || op.cols() != 2)
    throw std::invalid_argument("site_operator: op must be 2x2");

  const std::size_t left = std::size_t{1} << site;
  const std::size_t right = std::size_t{1} << (n_spins - 1 - site);
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (std::size_t l = 0; l < left; ++l)
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        if (op(a, b) == 0.0) continue;
        for (std::size_t r = 0; r < right; ++r)
          out((l * 2 + a) * right + r, (l * 2 + b) * right + r) = op(a, b);
      }
  return out;
}

/// Total I_z: diagonal, eigenvalue on each basis state is its magnetization.
inline ComplexMatrix total_iz(std::size_t n_spins) {
  const std::size_t dim = dimension_for(n_spins);
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (std::size_t p = 0; p < dim; ++p) out(p, p) = magnetization(p, n_spins);
  return out;
}

/// I_j+- lifted to the n-spin space; (I_j+)^dagger = I_j-.
inline ComplexMatrix raising_lowering(std::size_t site, Ladder which,
                                      std::size_t n_spins) {
  return site_operator(site, ladder(which), n_spins);
}

}  // namespace mqnmr
