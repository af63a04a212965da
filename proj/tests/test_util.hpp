#pragma once

#include <random>

#include "unruh/complex_matrix.hpp"
#include "unruh/unruh_state.hpp"

namespace test_util {

inline unruh::ComplexMatrix random_matrix(std::mt19937& rng, std::size_t dim) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  unruh::ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = unruh::cplx{d(rng), d(rng)};
  return m;
}

// Random mixed two-qubit state: A A^dag normalized to unit trace.
inline unruh::DensityMatrix random_density(std::mt19937& rng) {
  const auto a = random_matrix(rng, 4);
  auto m = unruh::matmul(a, a.dagger());
  m *= 1.0 / m.trace();
  // kill rounding asymmetry so the Hermiticity validation passes cleanly
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const unruh::cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = avg;
      m(j, i) = std::conj(avg);
    }
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = m(i, i).real();
  return unruh::make_density(2, std::move(m));
}

// Haar-ish random single-qubit unitary from three angles.
inline unruh::ComplexMatrix random_unitary(std::mt19937& rng) {
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  const double th = 0.5 * ang(rng), a = ang(rng), b = ang(rng);
  using unruh::cplx;
  return unruh::ComplexMatrix::from_rows(
      {{std::polar(std::cos(th), a), std::polar(std::sin(th), b)},
       {-std::polar(std::sin(th), -b), std::polar(std::cos(th), -a)}});
}

}  // namespace test_util
