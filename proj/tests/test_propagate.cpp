#include "near.hpp"
#include "schro/bench.hpp"
#include "schro/error.hpp"

using namespace schro;

TEST_CASE("table 3 cell is frozen")
{
    const auto s = HestenesScheme::harmonic(2);
    const cplx u = problems::table3_field(1, 1.0 / 40, Extension1D::Mode::hestenes, s, {0.2}, 1.0);
    check_near(u, cplx(0.77364765652338141, -0.63844757665945429), 1e-12);
    CHECK(std::abs(u - exact_gaussian_box(problems::gauss_shift, {0.2}, 1.0)) ==
          doctest::Approx(3.0693624658768032e-3).epsilon(1e-8));
}

TEST_CASE("free gaussian converges to the closed form")
{
    const std::vector<double> x{0.2, 0.1};
    const double e1 = std::abs(problems::free_gaussian_field(2, 0.1, x, 0.5) - problems::free_gaussian_exact(x, 0.5));
    const double e2 = std::abs(problems::free_gaussian_field(2, 0.05, x, 0.5) - problems::free_gaussian_exact(x, 0.5));
    CHECK(std::log2(e1 / e2) == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("rank one dense and separated agree")
{
    CubatureParams p;
    p.M = 2;
    p.h = 0.05;
    const auto box = Box::cube(2, -1.0, 1.0);
    Fn1 w = [](double y) { return cplx(std::exp(-y * y), 0.1 * y); };
    const auto [lo, hi] = spatial_window(-1.0, 1.0, p);
    auto tab = sample_factor(w, Extension1D::callback(-1.0, 1.0), p.h, lo, hi);
    const cplx sep = box_field(SeparatedFunction::rank_one(2, tab), box, p, {0.1, 0.3}, 0.2);
    const cplx dense = box_field_dense([&](const std::vector<double>& y) { return w(y[0]) * w(y[1]); }, box, p,
                                       {0.1, 0.3}, 0.2);
    check_near(sep, dense, 1e-12);
}

TEST_CASE("params validation")
{
    CubatureParams p;
    p.h = -1.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
}

TEST_CASE("potential phase")
{
    check_near(potential_phase(2.0, M_PI / 2), cplx(0, -2.0), 1e-15);
}
