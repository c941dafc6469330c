#pragma once

#include "schro/specfun.hpp"

#include <functional>

namespace schro {

/// Double-exponential substitution s = t phi(xi) plus trapezoid rule in xi.
struct MoriRule {
    double a = 1.0;
    double kappa = 0.05;
    long R = 120;

    void validate() const;
    /// Rule behind the reference tables; millions of nodes.
    static MoriRule reference() { return {1.0, 1e-5, 3000000}; }
};

/// 1 / (1 + exp(-a pi sinh xi))
double phi_map(double a, double xi);

/// cosh xi / (1 + cosh(a pi sinh xi)); (pi a / 2) weight = d phi / d xi.
double weight(double a, double xi);

/// Weights below this are skipped.
constexpr double weight_cutoff = 1e-300;

cplx integrate_0_to_t(const std::function<cplx(double)>& f, double t, const MoriRule& rule);

} // namespace schro
