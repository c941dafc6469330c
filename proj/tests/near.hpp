#pragma once

#include "schro/specfun.hpp"

#include <doctest.h>

#include <algorithm>
#include <complex>

inline void check_near(schro::cplx got, schro::cplx want, double rtol, double atol = 0.0)
{
    const double err = std::abs(got - want);
    INFO("got " << got << " want " << want << " err " << err);
    CHECK(err <= std::max(atol, rtol * std::abs(want)));
}
