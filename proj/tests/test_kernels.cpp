#include "near.hpp"
#include "schro/error.hpp"
#include "schro/kernels.hpp"

using namespace schro;

TEST_CASE("frozen kernel values")
{
    check_near(phi_factor(2, 0.3, 0.5), cplx(0.6470330084467163, -0.20042998610908494), 1e-13);
    check_near(psi(2, 0.3, 0.5, 0.1), cplx(0.2901410288774916, -0.21001165234276808), 1e-13);
    check_near(box_factor(2, 0.3, 0.5, -1, 1), cplx(0.64393809747100317, -0.20208501105078244), 1e-13);
}

TEST_CASE("stable and naive psi agree where both are usable")
{
    for (int M = 1; M <= 3; ++M)
        for (double y : {-1.0, -0.2, 0.4, 2.0})
            check_near(psi(M, 0.3, 0.7, y), psi_naive(M, 0.3, 0.7, y), 1e-11, 1e-13);
}

TEST_CASE("box factor is the difference of tails")
{
    for (int M = 1; M <= 3; ++M)
        check_near(box_factor(M, 0.1, 0.2, -1, 1), psi(M, 0.1, 0.2, -1.0) - psi(M, 0.1, 0.2, 1.0), 1e-12, 1e-14);
}

TEST_CASE("phi_tensor is a product of factors")
{
    check_near(phi_tensor(2, {0.3, -0.4}, 0.5), phi_factor(2, 0.3, 0.5) * phi_factor(2, -0.4, 0.5), 1e-14);
}
