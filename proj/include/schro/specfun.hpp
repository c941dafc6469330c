#pragma once

#include <complex>

namespace schro {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double sqrt_pi = 1.772453850905516027298167483341145183;

constexpr int max_poly_order = 64;

/// Hermite polynomial H_k by the three-term recurrence.
double hermite(int k, double x);
cplx hermite(int k, cplx z);

/// Generalized Laguerre polynomial L_k^{(gamma)}.
cplx laguerre(int k, double gamma, cplx z);

/// Faddeeva function W(z) = exp(-z^2) erfc(-iz), upper half-plane only.
cplx faddeeva(cplx z);

/// Complex complementary error function.
cplx erfc_complex(cplx z);

/// Scaled repeated integrals of erfc: out[k] = exp(z^2) i^k erfc(z), k = 0..K.
/// Requires Re z >= 0.
void ierfc_scaled(int K, cplx z, cplx* out);

} // namespace schro
