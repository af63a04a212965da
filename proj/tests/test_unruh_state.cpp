#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "unruh/spectrum.hpp"
#include "unruh/unruh_state.hpp"

using namespace unruh;

namespace {
constexpr double kPi4 = std::numbers::pi / 4.0;

double purity(const DensityMatrix& rho) {
  return matmul(rho.mat, rho.mat).trace().real();
}
}  // namespace

TEST_CASE("r_from_acceleration limits and a known value") {
  CHECK(r_from_acceleration({1.0, 1.0, 0.0, false}).r() == 0.0);
  CHECK(r_from_acceleration({1.0, 1.0, 0.0, true}).r() == doctest::Approx(kPi4).epsilon(1e-15));

  // omega = c = 1, a = 2*pi: cos r = (e^-1 + 1)^(-1/2)
  const auto r = r_from_acceleration({1.0, 1.0, 2.0 * std::numbers::pi, false});
  const double expected_cos = 1.0 / std::sqrt(std::exp(-1.0) + 1.0);
  CHECK(std::cos(r.r()) == doctest::Approx(expected_cos).epsilon(1e-14));
  CHECK(std::cos(r.r()) == doctest::Approx(0.85500).epsilon(2e-5));
}

TEST_CASE("r_from_acceleration rejects bad physical inputs") {
  CHECK_THROWS_AS(r_from_acceleration({0.0, 1.0, 1.0, false}), std::invalid_argument);
  CHECK_THROWS_AS(r_from_acceleration({1.0, -1.0, 1.0, false}), std::invalid_argument);
  CHECK_THROWS_AS(r_from_acceleration({1.0, 1.0, -1.0, false}), std::invalid_argument);
}

TEST_CASE("r_from_acceleration is monotone in a") {
  double prev = -1.0;
  for (double a = 0.5; a < 200.0; a *= 2.0) {
    const double r = r_from_acceleration({1.0, 1.0, a, false}).r();
    CHECK(r > prev);
    CHECK(r < kPi4);
    prev = r;
  }
}

TEST_CASE("three-mode state amplitudes") {
  const double is2 = 1.0 / std::sqrt(2.0);

  auto rho = build_three_mode_state(UnruhParameter(0.0));
  CHECK(rho.mat(0, 0).real() == doctest::Approx(0.5).epsilon(1e-15));   // |000>
  CHECK(rho.mat(6, 6).real() == doctest::Approx(0.5).epsilon(1e-15));   // |110>
  CHECK(std::abs(rho.mat(3, 3)) == 0.0);                                // |011>

  rho = build_three_mode_state(UnruhParameter(kPi4));
  CHECK(std::sqrt(rho.mat(0, 0).real()) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::sqrt(rho.mat(3, 3).real()) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::sqrt(rho.mat(6, 6).real()) == doctest::Approx(is2).epsilon(1e-14));

  for (const double r : {0.0, 0.2, 0.6, kPi4}) {
    const auto s = build_three_mode_state(UnruhParameter(r));
    CHECK(s.mat.trace().real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(purity(s) == doctest::Approx(1.0).epsilon(1e-13));  // pure state
  }
}

TEST_CASE("shared state endpoints") {
  // r = 0: the Bell state
  auto rho = build_shared_state(UnruhParameter(0.0));
  ComplexMatrix bell(4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  CHECK(max_abs_diff(rho.mat, bell) < 1e-14);

  // r = pi/4: diagonal (1/4, 1/4, 0, 1/2), off-diagonal 1/(2 sqrt 2)
  rho = build_shared_state(UnruhParameter(kPi4));
  CHECK(rho.mat(0, 0).real() == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(rho.mat(1, 1).real() == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(std::abs(rho.mat(2, 2)) == 0.0);
  CHECK(rho.mat(3, 3).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(rho.mat(0, 3).real() == doctest::Approx(0.5 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("trace pipeline agrees with the direct transcription") {
  for (int i = 0; i <= 50; ++i) {
    const UnruhParameter r(kPi4 * i / 50.0);
    CHECK(max_abs_diff(build_shared_state(r).mat, build_shared_state_direct(r).mat) < 1e-12);
  }
}

TEST_CASE("shared state is a valid density matrix for all r") {
  for (int i = 0; i <= 20; ++i) {
    const auto rho = build_shared_state(UnruhParameter(kPi4 * i / 20.0));
    CHECK(rho.mat.trace().real() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(is_hermitian(rho.mat, 1e-12));
    CHECK(max_abs_imag(rho.mat) < 1e-15);  // Eq. 5 matrix is real
    for (const double ev : real_spectrum(rho.mat)) CHECK(ev >= 0.0);
  }
}

TEST_CASE("purity is 1 at r = 0 and strictly decreasing") {
  double prev = purity(build_shared_state(UnruhParameter(0.0)));
  CHECK(prev == doctest::Approx(1.0).epsilon(1e-14));
  for (int i = 1; i <= 16; ++i) {
    const double cur = purity(build_shared_state(UnruhParameter(kPi4 * i / 16.0)));
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("UnruhParameter range is enforced") {
  CHECK_THROWS_AS(UnruhParameter(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(UnruhParameter(1.0), std::invalid_argument);
}
