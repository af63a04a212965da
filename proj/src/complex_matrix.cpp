#include "unruh/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace unruh {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  const std::size_t n = rows.size();
  ComplexMatrix m(n);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("from_rows: matrix must be square");
    std::size_t j = 0;
    for (const cplx& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::all_finite() const {
  for (const cplx& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("operator+=: dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("operator-=: dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (cplx& v : a_) v *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("matmul: dimension mismatch (" + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()) + ")");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix c(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) c(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return c;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int n_qubits, int traced_qubit) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (m.dim() != dim) throw std::invalid_argument("partial_trace: dim is not 2^n_qubits");
  if (traced_qubit < 0 || traced_qubit >= n_qubits)
    throw std::invalid_argument("partial_trace: traced qubit index out of range");

  // Qubit 0 is the MSB, so qubit q contributes bit (n_qubits-1-q).
  const int bit = n_qubits - 1 - traced_qubit;
  const std::size_t hi_mask = ((dim - 1) >> (bit + 1)) << (bit + 1);
  const std::size_t lo_mask = (std::size_t{1} << bit) - 1;

  const std::size_t out_dim = dim / 2;
  ComplexMatrix out(out_dim);
  for (std::size_t i = 0; i < out_dim; ++i) {
    const std::size_t ih = ((i << 1) & hi_mask) | (i & lo_mask);
    for (std::size_t j = 0; j < out_dim; ++j) {
      const std::size_t jh = ((j << 1) & hi_mask) | (j & lo_mask);
      cplx s = 0.0;
      for (std::size_t b = 0; b < 2; ++b)
        s += m(ih | (b << bit), jh | (b << bit));
      out(i, j) = s;
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

double max_abs_imag(const ComplexMatrix& a) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) d = std::max(d, std::abs(a(i, j).imag()));
  return d;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
  return true;
}

ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }
ComplexMatrix pauli_y() {
  return ComplexMatrix::from_rows({{0.0, cplx{0.0, -1.0}}, {cplx{0.0, 1.0}, 0.0}});
}
ComplexMatrix pauli_z() { return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}); }

}  // namespace unruh
