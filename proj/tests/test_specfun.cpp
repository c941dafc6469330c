#include "near.hpp"
#include "schro/error.hpp"

using namespace schro;

TEST_CASE("hermite and laguerre values")
{
    CHECK(hermite(3, 1.0) == -4.0);
    CHECK(hermite(4, 0.5) == 1.0);
    check_near(laguerre(2, 0.0, 1.0), -0.5, 1e-15);
    check_near(laguerre(3, 0.5, cplx(0, 2)), cplx(-4.8125, -7.416666666666666667), 1e-14);
    check_near(laguerre(2, -0.5, 0.0), 0.375, 1e-15);
    CHECK_THROWS_AS(laguerre(65, 0.5, 1.0), OrderTooLarge);
}

TEST_CASE("faddeeva")
{
    check_near(faddeeva(cplx(0, 1)), 0.42758357615580700442, 1e-14);
    check_near(faddeeva(cplx(1, 1)), cplx(0.30474420525691259246, 0.20821893820283162729), 1e-14);
    // W(-conj z) = conj W(z)
    const cplx z(0.7, 0.3);
    check_near(faddeeva(-std::conj(z)), std::conj(faddeeva(z)), 1e-14);
}

TEST_CASE("erfc_complex")
{
    check_near(erfc_complex(1.0), 0.15729920705028513066, 1e-14);
    check_near(erfc_complex(cplx(1, 2)), cplx(1.5366435657785650340, 5.0491437034470346695), 1e-13);
}

TEST_CASE("iterated erfc satisfies its recurrence")
{
    // 2k G_k = G_{k-2} - 2 z G_{k-1}
    for (cplx z : {cplx(0.3, 0.1), cplx(0.2, 5.0), cplx(3.0, 2.0), cplx(12.0, -3.0)}) {
        cplx g[9];
        ierfc_scaled(8, z, g);
        for (int k = 2; k <= 8; ++k)
            check_near(2.0 * k * g[k], g[k - 2] - 2.0 * z * g[k - 1], 0.0,
                       1e-13 * (std::abs(g[k - 2]) + std::abs(2.0 * z * g[k - 1])) + 1e-15 * std::abs(g[0]));
    }
}
