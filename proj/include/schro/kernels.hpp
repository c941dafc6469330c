#pragma once

#include "schro/specfun.hpp"

#include <vector>

namespace schro {

/// Propagated 1-D generating function phi_{2M}(x, t), Laguerre form.
cplx phi_factor(int M, double x, double t);

/// Tensor kernel, Hermite product form.
cplx phi_tensor(int M, const std::vector<double>& xs, double t);

/// Radial Laguerre kernel Phi_N.
cplx phi_radial(int M, const std::vector<double>& xs, double t);

/// Argument function sqrt((tc+1)/tc) (y - x/(tc+1)).
cplx f_arg(double x, cplx tc, double y);

cplx p_poly(int M, double x, cplx tc);
cplx q_poly(int M, double x, cplx tc, double y);

/// Interval kernel: (pi i t)^{-1/2} int_y^inf exp(i(s-x)^2/t) chi_{2M}(s) ds.
/// Stable evaluation through scaled repeated erfc integrals.
cplx psi(int M, double x, double t, double y);

/// Erfc closed form; throws OverflowError when |F| > 25.
cplx psi_naive(int M, double x, double t, double y);

/// Two-branch Faddeeva closed form with the P/Q polynomials as written.
/// Loses accuracy to cancellation for small t and M > 1.
cplx psi_literal(int M, double x, double t, double y);

/// psi(M,x,t,P) - psi(M,x,t,Q)
cplx box_factor(int M, double x, double t, double P, double Q);

} // namespace schro
