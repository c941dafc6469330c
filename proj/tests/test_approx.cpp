#include "near.hpp"
#include "schro/approx.hpp"
#include "schro/error.hpp"

#include <cmath>

using namespace schro;

TEST_CASE("chi at the origin")
{
    CHECK(chi(1, 0.0) == doctest::Approx(0.56418958354775628695).epsilon(1e-15));
    CHECK(chi(2, 0.0) == doctest::Approx(0.84628437532163443042).epsilon(1e-15));
    CHECK(chi(3, 0.0) == doctest::Approx(1.0578554691520430380).epsilon(1e-15));
    CHECK(chi(2, 0.7) == doctest::Approx(0.34909380450732202362).epsilon(1e-14));
}

TEST_CASE("saturation at D = 4")
{
    CHECK(saturation_bound(1, 4.0, 0) < 1e-16);
    CHECK(saturation_bound(2, 4.0, 0) < 1e-15);
    CHECK(saturation_bound(1, 2.0, 0) < 1e-8);
}

TEST_CASE("two-term Hestenes coefficients")
{
    const auto c = hestenes_coeffs({1.0, 0.5}, 1);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == doctest::Approx(-3.0).epsilon(1e-15));
    CHECK(c[1] == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("harmonic N = 6 coefficients are integers")
{
    const double want[] = {28, -7168, 153090, -917504, 2187500, -2239488, 823543};
    const auto s = HestenesScheme::harmonic(6);
    REQUIRE(s.coeffs.size() == 7);
    for (int i = 0; i < 7; ++i)
        CHECK(s.coeffs[i] == doctest::Approx(want[i]).epsilon(1e-14));
    CHECK(s.residual() < 1e-9);
}

TEST_CASE("Hestenes rejects coincident alphas")
{
    CHECK_THROWS_AS(hestenes_coeffs({0.5, 0.5}, 1), DomainError);
}

TEST_CASE("cos^2 extension is C^5 at the right end")
{
    const auto ext = Extension1D::hestenes(HestenesScheme::harmonic(5), -1.0, 1.0);
    Fn1 w = [](double x) { const double c = std::cos(2.5 * M_PI * x); return cplx(c * c); };
    // Fifth differences of the extension straddling x = 1 match the analytic ones to O(step).
    for (double d : {0.02, 0.01}) {
        auto diff5 = [&](auto f) {
            const double c[] = {-1, 5, -10, 10, -5, 1};
            cplx s = 0;
            for (int i = 0; i < 6; ++i)
                s += c[i] * f(1.0 + (i - 2.5) * d);
            return s / std::pow(d, 5);
        };
        const cplx ext5 = diff5([&](double x) { return extend_1d(w, ext, x); });
        const cplx ana5 = diff5([&](double x) { return w(x); });
        // analytic fifth derivative of cos^2(5 pi x / 2) is of size (5 pi)^5 / 2
        CHECK(std::abs(ext5 - ana5) < 60.0 * d * std::pow(5 * M_PI, 5));
    }
}

TEST_CASE("extension leaves interior values alone")
{
    const auto ext = Extension1D::hestenes(HestenesScheme::harmonic(4), -1.0, 1.0);
    Fn1 w = [](double x) { return cplx(std::exp(x), x); };
    CHECK(extend_1d(w, ext, 0.3) == w(0.3));
    CHECK_THROWS_AS(extend_1d(w, ext, 3.5), OutOfExtension);
    CHECK(extend_1d(w, Extension1D::zero(-1, 1), 1.5) == cplx(0.0));
}
