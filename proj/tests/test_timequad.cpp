#include "near.hpp"
#include "schro/error.hpp"
#include "schro/timequad.hpp"

#include <cmath>

using namespace schro;

TEST_CASE("desk rule integrates e^{is} on [0, 2]")
{
    const cplx got = integrate_0_to_t([](double s) { return std::exp(cplx(0, s)); }, 2.0, MoriRule{});
    check_near(got, cplx(std::sin(2.0), 1.0 - std::cos(2.0)), 1e-13);
}

TEST_CASE("constants are exact")
{
    for (double kappa : {0.1, 0.05, 0.01})
        check_near(integrate_0_to_t([](double) { return cplx(1.0); }, 3.0, MoriRule{1.0, kappa, long(4.0 / kappa)}),
                   3.0, 1e-12);
}

TEST_CASE("phi_map is a map onto (0, 1)")
{
    CHECK(phi_map(1.0, 0.0) == 0.5);
    CHECK(phi_map(1.0, 5.0) > 1.0 - 1e-12);
    CHECK(phi_map(1.0, -5.0) < 1e-12);
}

TEST_CASE("rule validation")
{
    CHECK_THROWS_AS((MoriRule{1.0, 0.01, 10}).validate(), DomainError);
    CHECK_NOTHROW(MoriRule::reference().validate());
}
