#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

#include <mqnmr/coherence.hpp>
#include <mqnmr/model.hpp>

#include <cmath>
#include <numbers>

using namespace mqnmr;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kReferenceCoupling = 2.0 * std::numbers::pi * 1307.0;  // rad/s

struct Pipeline {
  DensityMatrix rho_tau;
  ComplexMatrix ht;
};

Pipeline evolve_pair(double beta, double b, double tau) {
  const auto sd = hermitian_eigendecompose(build_h_mq(SpinSystem::pair(b)));
  return {evolve(thermal_state(beta, 2), sd, tau), ht_reference(sd, tau, 2)};
}

}  // namespace

TEST_CASE("a diagonal matrix is pure zero-order") {
  ComplexMatrix d = ComplexMatrix::Zero(4, 4);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  d(2, 2) = Complex{0.0, -1.0};
  d(3, 3) = -4.0;
  const auto comps = decompose_by_order(d, 2);
  CHECK(comps.by_order.size() == 1);
  CHECK(comps.by_order.count(0) == 1);
  CHECK(max_abs_diff(comps.component(0), d) == 0.0);
}

TEST_CASE("reconstruction is an exact partition") {
  std::mt19937 rng(53u);
  for (std::size_t n : {1u, 2u, 3u, 4u}) {
    const ComplexMatrix a =
        test_support::random_complex(dimension_for(n), rng);
    const auto comps = decompose_by_order(a, n);
    CHECK(max_abs_diff(comps.reconstruct(), a) == 0.0);
  }
  CHECK_THROWS_AS(decompose_by_order(ComplexMatrix::Zero(4, 4), 3),
                  std::invalid_argument);
}

TEST_CASE("components of a Hermitian matrix pair up under the adjoint") {
  std::mt19937 rng(59u);
  for (std::size_t n : {2u, 3u}) {
    const ComplexMatrix h =
        test_support::random_hermitian(dimension_for(n), rng);
    const auto comps = decompose_by_order(h, n);
    for (int order = -static_cast<int>(n); order <= static_cast<int>(n);
         ++order)
      CHECK(max_abs_diff(comps.component(-order),
                         comps.component(order).adjoint()) <= 1e-14);
  }
}

TEST_CASE("the evolved pair state populates only orders 0 and +-2") {
  const auto [rho_tau, ht] = evolve_pair(3.0, kReferenceCoupling, 2.3e-4);
  const auto comps = decompose_by_order(rho_tau.matrix(), 2);
  for (int order : {-1, 1})
    CHECK(comps.component(order).cwiseAbs().maxCoeff() <= 1e-14);
  for (int order : {-2, 0, 2})
    CHECK(comps.component(order).cwiseAbs().maxCoeff() > 0.01);
}

TEST_CASE("the (0,3) corner carries coherence order +2") {
  ComplexMatrix a = ComplexMatrix::Zero(4, 4);
  a(0, 3) = Complex{0.0, 0.25};
  const auto comps = decompose_by_order(a, 2);
  CHECK(std::abs(comps.component(2)(0, 3) - a(0, 3)) == 0.0);
  CHECK(comps.component(0).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("intensities at tau = 0") {
  const double beta = 3.0;
  const auto [rho0, iz] = evolve_pair(beta, kReferenceCoupling, 0.0);
  CHECK_THAT(intensity(rho0, iz, 0),
             WithinAbs(std::tanh(0.5 * beta), 1e-12));
  CHECK_THAT(intensity(rho0, iz, 2), WithinAbs(0.0, 1e-14));
  CHECK_THAT(intensity(rho0, iz, -2), WithinAbs(0.0, 1e-14));
}

TEST_CASE("second-order intensity peaks at 2 b tau = pi/2") {
  const double tau = std::numbers::pi / (4.0 * kReferenceCoupling);
  const auto [rho_tau, ht] = evolve_pair(3.0, kReferenceCoupling, tau);
  // (1/2) tanh(1.5)
  CHECK_THAT(intensity(rho_tau, ht, 2),
             WithinAbs(0.4525741268224332, 1e-10));
}

TEST_CASE("intensity validates its inputs") {
  const auto [rho_tau, ht] = evolve_pair(3.0, kReferenceCoupling, 2.3e-4);

  ComplexMatrix not_hermitian = ComplexMatrix::Zero(4, 4);
  not_hermitian(0, 3) = 1.0;
  CHECK_THROWS_AS(intensity(rho_tau, not_hermitian, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(intensity(rho_tau, ComplexMatrix::Zero(8, 8), 2),
                  std::invalid_argument);

  // Hermitian but unrelated reference: the +2/-2 overlap trace lands on the
  // imaginary axis, which the residue gate must catch.
  const double tau = std::numbers::pi / (4.0 * kReferenceCoupling);
  const auto peak = evolve_pair(3.0, kReferenceCoupling, tau);
  const ComplexMatrix mismatched = build_h_mq(SpinSystem::pair(1.0));
  CHECK_THROWS_AS(intensity(peak.rho_tau, mismatched, 2), numeric_error);
}

TEST_CASE("analytic intensities follow the closed form") {
  const double beta = 3.0;
  const double t = std::tanh(0.5 * beta);

  const auto at_peak = analytic_intensities(
      beta, kReferenceCoupling, std::numbers::pi / (4.0 * kReferenceCoupling));
  CHECK_THAT(at_peak.at(0), WithinAbs(0.0, 1e-15));
  CHECK_THAT(at_peak.g2_plus_gm2(), WithinAbs(t, 1e-15));
  CHECK(at_peak.at(1) == 0.0);
  CHECK(at_peak.at(-1) == 0.0);
  CHECK(at_peak.intensities.size() == 5);
}

TEST_CASE("numeric profile equals the closed form on a tau grid") {
  const double beta = 3.0;
  const auto sd =
      hermitian_eigendecompose(build_h_mq(SpinSystem::pair(kReferenceCoupling)));
  const DensityMatrix rho0 = thermal_state(beta, 2);
  for (int k = 0; k < 64; ++k) {
    const double tau = 2.0 * std::numbers::pi * k / 63.0 / (2.0 * kReferenceCoupling);
    const DensityMatrix rho_tau = evolve(rho0, sd, tau);
    const CoherenceProfile numeric =
        intensity_profile(rho_tau, ht_reference(sd, tau, 2), beta, tau);
    const CoherenceProfile analytic =
        analytic_intensities(beta, kReferenceCoupling, tau);
    for (int order = -2; order <= 2; ++order)
      CHECK_THAT(numeric.at(order), WithinAbs(analytic.at(order), 1e-10));

    // conservation and the +-2 symmetry
    CHECK_THAT(numeric.total(), WithinAbs(std::tanh(0.5 * beta), 1e-10));
    CHECK_THAT(numeric.at(2), WithinAbs(numeric.at(-2), 1e-10));
  }
}

TEST_CASE("profiles repeat with period pi / (2 b)") {
  const double beta = 1.0;
  const double period = std::numbers::pi / (2.0 * kReferenceCoupling);
  for (double tau : {3e-5, 2.9e-4}) {
    const auto a = evolve_pair(beta, kReferenceCoupling, tau);
    const auto b = evolve_pair(beta, kReferenceCoupling, tau + period);
    const auto prof_a = intensity_profile(a.rho_tau, a.ht, beta, tau);
    const auto prof_b = intensity_profile(b.rho_tau, b.ht, beta, tau + period);
    for (int order = -2; order <= 2; ++order)
      CHECK_THAT(prof_a.at(order), WithinAbs(prof_b.at(order), 1e-10));
  }
}

TEST_CASE("normalized profile sums to one") {
  const auto profile = analytic_intensities(2.0, kReferenceCoupling, 1.1e-4);
  const auto normalized = profile.normalized();
  CHECK_THAT(normalized.total(), WithinAbs(1.0, 1e-14));
  // scaling preserves the shape
  CHECK_THAT(normalized.at(0) * profile.total(),
             WithinAbs(profile.at(0), 1e-14));
}
