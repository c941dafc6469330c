#include "schro/timequad.hpp"

#include "schro/error.hpp"

#include <cmath>

namespace schro {

void MoriRule::validate() const
{
    if (!(a > 0) || !(kappa > 0) || R < 1)
        throw DomainError("MoriRule: need a > 0, kappa > 0, R >= 1");
    if (kappa * R < 3.0)
        throw DomainError("MoriRule: kappa * R < 3");
    if (R > 10000000)
        throw DomainError("MoriRule: R > 1e7");
}

double phi_map(double a, double xi)
{
    return 1.0 / (1.0 + std::exp(-a * pi * std::sinh(xi)));
}

double weight(double a, double xi)
{
    const double c = std::cosh(a * pi * std::sinh(xi));
    if (!std::isfinite(c))
        return 0.0;
    return std::cosh(xi) / (1.0 + c);
}

cplx integrate_0_to_t(const std::function<cplx(double)>& f, double t, const MoriRule& rule)
{
    rule.validate();
    if (!(t > 0))
        throw DomainError("integrate_0_to_t: t <= 0");
    cplx s = 0.0;
    for (long q = -rule.R; q <= rule.R; ++q) {
        const double xi = rule.kappa * q;
        const double w = weight(rule.a, xi);
        if (w < weight_cutoff)
            continue;
        s += f(t * phi_map(rule.a, xi)) * w;
    }
    return 0.5 * pi * rule.a * t * rule.kappa * s;
}

} // namespace schro
