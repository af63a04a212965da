#include "unruh/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace unruh {

namespace {

// The whole root pipeline runs in long double: a double eigenvalue of
// multiplicity m resolved through polynomial coefficients is only
// accurate to eps^(1/m), and the acceptance tolerances need the extra
// headroom (80-bit eps^(1/2) ~ 3e-10).
using ld = long double;
using lcplx = std::complex<ld>;

// Coefficients below this are rounding noise for the unit-scale matrices
// handled here: the inputs are double-precision products, so an exactly
// singular matrix yields spurious coefficients up to ~1e-15. Genuine
// coefficients on the supported grids stay above ~8e-14 (two-qubit
// depolarizing at p = 0.01), leaving a clean decade between the two.
constexpr ld kCoeffSnap = 2e-14L;

// A real root of multiplicity m perturbed by coefficient noise eps can
// split into conjugate pairs with |Im| ~ eps^(1/m); collapse such pairs
// back to the real axis before the kTolImag contract check. Genuine
// complex spectra in this domain are orders of magnitude larger.
constexpr ld kImagCollapse = 1e-5L;

std::array<lcplx, 2> eig2(lcplx a, lcplx b, lcplx c, lcplx d) {
  const lcplx t = 0.5L * (a + d);
  const lcplx disc = std::sqrt(t * t - (a * d - b * c));
  return {t + disc, t - disc};
}

std::vector<std::vector<lcplx>> to_long(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::vector<lcplx>> a(n, std::vector<lcplx>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = lcplx{m(i, j).real(), m(i, j).imag()};
  return a;
}

std::vector<std::vector<lcplx>> mul(const std::vector<std::vector<lcplx>>& a,
                                    const std::vector<std::vector<lcplx>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<lcplx>> c(n, std::vector<lcplx>(n, lcplx{}));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const lcplx aik = a[i][k];
      if (aik == lcplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

lcplx tr(const std::vector<std::vector<lcplx>>& a) {
  lcplx t{};
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

// Monic characteristic polynomial via the Faddeev-LeVerrier recursion.
std::vector<lcplx> fl_coeffs(const std::vector<std::vector<lcplx>>& m) {
  const std::size_t n = m.size();
  std::vector<lcplx> coeffs;
  auto mk = m;
  lcplx ck = -tr(mk);
  coeffs.push_back(ck);
  for (std::size_t k = 2; k <= n; ++k) {
    auto shifted = mk;
    for (std::size_t i = 0; i < n; ++i) shifted[i][i] += ck;
    mk = mul(m, shifted);
    ck = -tr(mk) / static_cast<ld>(k);
    coeffs.push_back(ck);
  }
  return coeffs;
}

// Shifted QR iteration on the (upper Hessenberg) companion matrix.
std::vector<lcplx> companion_qr(const std::vector<ld>& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  std::vector<std::vector<lcplx>> h(n, std::vector<lcplx>(n, lcplx{}));
  for (int i = 1; i < n; ++i) h[i][i - 1] = 1.0L;
  for (int i = 0; i < n; ++i) h[i][n - 1] = -coeffs[n - 1 - i];

  std::vector<lcplx> roots;
  roots.reserve(n);
  int m = n - 1;  // active block is h[0..m][0..m]
  int stall = 0;
  int total = 0;
  while (m >= 0) {
    if (++total > 500) throw SpectrumError("companion QR failed to converge", 0.0);
    if (m == 0) {
      roots.push_back(h[0][0]);
      break;
    }
    const ld sub = std::abs(h[m][m - 1]);
    if (sub <= 1e-18L * (std::abs(h[m - 1][m - 1]) + std::abs(h[m][m])) + 1e-300L) {
      roots.push_back(h[m][m]);
      --m;
      stall = 0;
      continue;
    }
    if (m == 1) {
      const auto e = eig2(h[0][0], h[0][1], h[1][0], h[1][1]);
      roots.push_back(e[0]);
      roots.push_back(e[1]);
      break;
    }
    lcplx mu;
    if (++stall % 15 == 0) {
      mu = h[m][m] + lcplx{1.5L, 0.5L} * sub;  // exceptional shift
    } else {
      const auto e = eig2(h[m - 1][m - 1], h[m - 1][m], h[m][m - 1], h[m][m]);
      mu = (std::abs(e[0] - h[m][m]) < std::abs(e[1] - h[m][m])) ? e[0] : e[1];
    }
    for (int i = 0; i <= m; ++i) h[i][i] -= mu;
    // Explicit QR via Givens rotations, then RQ.
    std::vector<std::array<lcplx, 2>> rot(m);
    for (int i = 0; i < m; ++i) {
      const lcplx a = h[i][i], b = h[i + 1][i];
      const ld r = std::hypot(std::abs(a), std::abs(b));
      if (r == 0.0L) {
        rot[i] = {lcplx{1.0L}, lcplx{}};
        continue;
      }
      const lcplx ca = std::conj(a) / r, cb = std::conj(b) / r;
      rot[i] = {ca, cb};
      for (int j = i; j <= m; ++j) {
        const lcplx x = h[i][j], y = h[i + 1][j];
        h[i][j] = ca * x + cb * y;
        h[i + 1][j] = -std::conj(cb) * x + std::conj(ca) * y;
      }
    }
    for (int i = 0; i < m; ++i) {
      const lcplx ca = rot[i][0], cb = rot[i][1];
      for (int j = 0; j <= std::min(i + 2, m); ++j) {
        const lcplx x = h[j][i], y = h[j][i + 1];
        h[j][i] = x * std::conj(ca) + y * std::conj(cb);
        h[j][i + 1] = -x * cb + y * ca;
      }
    }
    for (int i = 0; i <= m; ++i) h[i][i] += mu;
  }
  return roots;
}

std::vector<lcplx> roots_of(std::vector<ld> c) {
  for (ld& v : c)
    if (std::abs(v) < kCoeffSnap) v = 0.0L;

  std::vector<lcplx> roots;
  while (!c.empty() && c.back() == 0.0L) {  // exact zero roots
    roots.emplace_back(0.0L);
    c.pop_back();
  }
  if (!c.empty()) {
    std::vector<lcplx> rest;
    if (c.size() == 1) {
      rest = {lcplx{-c[0]}};
    } else if (c.size() == 2) {
      const auto e = eig2(lcplx{}, lcplx{-c[1]}, lcplx{1.0L}, lcplx{-c[0]});
      rest = {e[0], e[1]};
    } else {
      rest = companion_qr(c);
    }
    roots.insert(roots.end(), rest.begin(), rest.end());
  }
  for (lcplx& z : roots)
    if (std::abs(z.imag()) <= kImagCollapse) z = lcplx{z.real(), 0.0L};
  return roots;
}

std::vector<double> spectrum_of(const std::vector<std::vector<lcplx>>& m) {
  const auto cc = fl_coeffs(m);
  std::vector<ld> c(cc.size());
  for (std::size_t i = 0; i < cc.size(); ++i) {
    if (std::abs(cc[i].imag()) > 1e-9L)
      throw SpectrumError("characteristic polynomial has complex coefficients",
                          static_cast<double>(cc[i].imag()));
    c[i] = cc[i].real();
  }
  const auto roots = roots_of(std::move(c));
  std::vector<double> vals;
  vals.reserve(roots.size());
  for (const lcplx& z : roots) {
    if (std::abs(z.imag()) > static_cast<ld>(kTolImag))
      throw SpectrumError("spectrum violation: complex eigenvalue",
                          static_cast<double>(z.imag()));
    double v = static_cast<double>(z.real());
    if (v < 0.0) {
      if (v < -kTolEig) throw SpectrumError("spectrum violation: negative eigenvalue", v);
      v = 0.0;
    }
    vals.push_back(v);
  }
  std::sort(vals.begin(), vals.end(), std::greater<>());
  return vals;
}

}  // namespace

std::vector<cplx> char_poly(const ComplexMatrix& m) {
  if (m.dim() > 4) throw std::invalid_argument("char_poly: supported only up to dim 4");
  const auto cc = fl_coeffs(to_long(m));
  std::vector<cplx> out(cc.size());
  for (std::size_t i = 0; i < cc.size(); ++i)
    out[i] = cplx{static_cast<double>(cc[i].real()), static_cast<double>(cc[i].imag())};
  return out;
}

std::vector<cplx> poly_roots(const std::vector<double>& coeffs) {
  std::vector<ld> c(coeffs.begin(), coeffs.end());
  const auto roots = roots_of(std::move(c));
  std::vector<cplx> out(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i)
    out[i] = cplx{static_cast<double>(roots[i].real()), static_cast<double>(roots[i].imag())};
  return out;
}

std::vector<double> real_spectrum(const ComplexMatrix& m) {
  if (m.dim() > 4) throw std::invalid_argument("real_spectrum: supported only up to dim 4");
  return spectrum_of(to_long(m));
}

EigenSpectrum eigenvalues_product(const ComplexMatrix& rho, const ComplexMatrix& rho_tilde) {
  if (rho.dim() != 4 || rho_tilde.dim() != 4)
    throw std::invalid_argument("eigenvalues_product: both matrices must be 4x4");
  const auto vals = spectrum_of(mul(to_long(rho), to_long(rho_tilde)));
  EigenSpectrum s{};
  for (std::size_t i = 0; i < 4; ++i) s.values[i] = vals[i];
  return s;
}

}  // namespace unruh
