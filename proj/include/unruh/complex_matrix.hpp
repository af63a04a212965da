#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace unruh {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. Dimensions here are tiny
/// (2, 4 or 8), so everything is by value and unoptimized.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t dim() const { return dim_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  ComplexMatrix dagger() const;
  cplx trace() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

 private:
  std::size_t dim_;
  std::vector<cplx> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);

/// Matrix product; throws std::invalid_argument on dimension mismatch.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product, dim = a.dim * b.dim; block (i,j) is a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace out one qubit of an n-qubit operator (dim 2^n). Qubit 0 is the
/// leftmost ket label, i.e. the most significant bit of the index.
ComplexMatrix partial_trace(const ComplexMatrix& m, int n_qubits, int traced_qubit);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_imag(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& m, double tol);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace unruh
