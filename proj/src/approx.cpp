#include "schro/approx.hpp"

#include "schro/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace schro {

namespace {

// Coefficients of x^k in a polynomial times exp(-pi^2 xi^2); returns d/dxi.
std::vector<double> gauss_poly_derivative(const std::vector<double>& c)
{
    std::vector<double> d(c.size() + 1, 0.0);
    for (size_t k = 1; k < c.size(); ++k)
        d[k - 1] += k * c[k];
    for (size_t k = 0; k < c.size(); ++k)
        d[k + 1] -= 2.0 * pi * pi * c[k];
    return d;
}

double poly_eval(const std::vector<double>& c, double x)
{
    double s = 0.0;
    for (size_t k = c.size(); k-- > 0;)
        s = s * x + c[k];
    return s;
}

} // namespace

void GeneratingSpec::validate() const
{
    if (M < 1 || M > 8)
        throw DomainError("GeneratingSpec: M outside [1, 8]");
    if (!(D >= 1.0 && D <= 16.0) || !(D0 >= 1.0 && D0 <= 16.0))
        throw DomainError("GeneratingSpec: D, D0 outside [1, 16]");
}

double chi(int M, double x)
{
    const double x2 = x * x;
    double s = 0.0;
    for (int l = 0; l < M; ++l)
        s += laguerre(l, -0.5, x2).real();
    return s * std::exp(-x2) / sqrt_pi;
}

double chi_fourier(int M, double xi)
{
    const double u = pi * pi * xi * xi;
    double term = 1.0, s = 0.0;
    for (int l = 0; l < M; ++l) {
        s += term;
        term *= u / (l + 1);
    }
    return std::exp(-u) * s;
}

double saturation_bound(int M, double D, int alpha_order)
{
    if (alpha_order < 0 || alpha_order > 2 * M)
        throw DomainError("saturation_bound: alpha_order outside [0, 2M]");
    std::vector<double> c(2 * M - 1, 0.0);
    double term = 1.0;
    for (int l = 0; l < M; ++l) {
        c[2 * l] = term;
        term *= pi * pi / (l + 1);
    }
    for (int a = 0; a < alpha_order; ++a)
        c = gauss_poly_derivative(c);
    const double sd = std::sqrt(D);
    double s = 0.0;
    for (int nu = 1; nu < 10000; ++nu) {
        const double xi = sd * nu;
        const double v = std::abs(poly_eval(c, xi)) * std::exp(-pi * pi * xi * xi);
        s += 2.0 * v;
        if (v < 1e-30 && nu > 2)
            break;
    }
    return s;
}

cplx sigma_lattice(int M, double D, double x, double h)
{
    if (!(h > 0))
        throw DomainError("sigma_lattice: h <= 0");
    const double sd = std::sqrt(D);
    const double w = lattice_radius * h * sd;
    const long lo = static_cast<long>(std::ceil((x - w) / h));
    const long hi = static_cast<long>(std::floor((x + w) / h));
    double s = 0.0;
    for (long m = lo; m <= hi; ++m)
        s += chi(M, (x - h * m) / (h * sd));
    return s / sd;
}

cplx sigma_fourier(int M, double D, double x, double h)
{
    const double sd = std::sqrt(D);
    cplx s = 1.0;
    for (int nu = 1; nu < 1000; ++nu) {
        const double f = chi_fourier(M, sd * nu);
        s += 2.0 * f * std::cos(2.0 * pi * nu * x / h);
        if (f < 1e-300)
            break;
    }
    return s;
}

cplx quasi_interp(const FnN& g, const GeneratingSpec& spec, double h, const std::vector<double>& x)
{
    spec.validate();
    const size_t n = x.size();
    const double sd = std::sqrt(spec.D);
    const double w = lattice_radius * h * sd;
    std::vector<long> lo(n), hi(n), m(n);
    std::vector<std::vector<double>> basis(n);
    for (size_t j = 0; j < n; ++j) {
        lo[j] = static_cast<long>(std::ceil((x[j] - w) / h));
        hi[j] = static_cast<long>(std::floor((x[j] + w) / h));
        for (long k = lo[j]; k <= hi[j]; ++k)
            basis[j].push_back(chi(spec.M, (x[j] - h * k) / (h * sd)));
        m[j] = lo[j];
    }
    std::vector<double> node(n);
    cplx s = 0.0;
    for (;;) {
        double b = 1.0;
        for (size_t j = 0; j < n; ++j) {
            node[j] = h * m[j];
            b *= basis[j][m[j] - lo[j]];
        }
        s += g(node) * b;
        size_t j = 0;
        while (j < n && ++m[j] > hi[j]) {
            m[j] = lo[j];
            ++j;
        }
        if (j == n)
            break;
    }
    return s / std::pow(spec.D, 0.5 * n);
}

std::vector<double> hestenes_coeffs(const std::vector<double>& alphas, int N)
{
    const auto c = hestenes_coeffs_ld(alphas, N);
    return std::vector<double>(c.begin(), c.end());
}

std::vector<long double> hestenes_coeffs_ld(const std::vector<double>& alphas, int N)
{
    using ld = long double;
    const int n = N + 1;
    if (N < 0 || static_cast<int>(alphas.size()) != n)
        throw DomainError("hestenes_coeffs: need N+1 multipliers");
    for (int i = 0; i < n; ++i) {
        if (!(alphas[i] > 0))
            throw DomainError("hestenes_coeffs: multipliers must be positive");
        for (int j = 0; j < i; ++j)
            if (alphas[i] == alphas[j])
                throw DomainError("hestenes_coeffs: multipliers must be distinct");
    }
    // A[k][s] = (-alpha_s)^k
    std::vector<ld> A(n * n);
    for (int s = 0; s < n; ++s) {
        ld p = 1.0L;
        for (int k = 0; k < n; ++k) {
            A[k * n + s] = p;
            p *= -static_cast<ld>(alphas[s]);
        }
    }
    // LU with scaled partial pivoting, in extended precision.
    std::vector<ld> LU = A;
    std::vector<int> perm(n);
    std::vector<ld> scale(n);
    for (int k = 0; k < n; ++k) {
        perm[k] = k;
        ld mx = 0;
        for (int s = 0; s < n; ++s)
            mx = std::max(mx, std::abs(A[k * n + s]));
        scale[k] = mx;
    }
    for (int c = 0; c < n; ++c) {
        int piv = c;
        ld best = -1;
        for (int r = c; r < n; ++r) {
            const ld v = std::abs(LU[r * n + c]) / scale[perm[r]];
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (LU[piv * n + c] == 0)
            throw IllConditioned("hestenes_coeffs: singular system");
        if (piv != c) {
            for (int j = 0; j < n; ++j)
                std::swap(LU[piv * n + j], LU[c * n + j]);
            std::swap(perm[piv], perm[c]);
        }
        for (int r = c + 1; r < n; ++r) {
            const ld f = LU[r * n + c] / LU[c * n + c];
            LU[r * n + c] = f;
            for (int j = c + 1; j < n; ++j)
                LU[r * n + j] -= f * LU[c * n + j];
        }
    }
    auto solve = [&](std::vector<ld> b) {
        std::vector<ld> y(n);
        for (int i = 0; i < n; ++i) {
            ld s = b[perm[i]];
            for (int j = 0; j < i; ++j)
                s -= LU[i * n + j] * y[j];
            y[i] = s;
        }
        for (int i = n - 1; i >= 0; --i) {
            ld s = y[i];
            for (int j = i + 1; j < n; ++j)
                s -= LU[i * n + j] * y[j];
            y[i] = s / LU[i * n + i];
        }
        return y;
    };
    // 1-norm condition estimate from the explicit inverse.
    ld anorm = 0, inorm = 0;
    for (int s = 0; s < n; ++s) {
        ld c = 0;
        for (int k = 0; k < n; ++k)
            c += std::abs(A[k * n + s]);
        anorm = std::max(anorm, c);
        std::vector<ld> e(n, 0.0L);
        e[s] = 1.0L;
        const auto col = solve(e);
        ld ci = 0;
        for (ld v : col)
            ci += std::abs(v);
        inorm = std::max(inorm, ci);
    }
    const double cond = static_cast<double>(anorm * inorm);
    if (cond > 1e14)
        throw IllConditioned("hestenes_coeffs: condition estimate " + std::to_string(cond));
    std::vector<ld> x = solve(std::vector<ld>(n, 1.0L));
    for (int it = 0; it < 3; ++it) {
        std::vector<ld> r(n);
        for (int k = 0; k < n; ++k) {
            ld s = 1.0L;
            for (int j = 0; j < n; ++j)
                s -= A[k * n + j] * x[j];
            r[k] = s;
        }
        const auto d = solve(r);
        for (int j = 0; j < n; ++j)
            x[j] += d[j];
    }
    return x;
}

HestenesScheme HestenesScheme::make(std::vector<double> alphas, int N)
{
    HestenesScheme s;
    s.coeffs_ld = hestenes_coeffs_ld(alphas, N);
    s.coeffs.assign(s.coeffs_ld.begin(), s.coeffs_ld.end());
    s.alphas = std::move(alphas);
    s.order = N;
    return s;
}

HestenesScheme HestenesScheme::harmonic(int N)
{
    std::vector<double> a(N + 1);
    for (int s = 1; s <= N + 1; ++s)
        a[s - 1] = 1.0 / s;
    return make(std::move(a), N);
}

HestenesScheme HestenesScheme::dyadic(int N)
{
    std::vector<double> a(N + 1);
    for (int s = 1; s <= N + 1; ++s)
        a[s - 1] = std::ldexp(1.0, -s);
    return make(std::move(a), N);
}

double HestenesScheme::max_alpha() const
{
    return alphas.empty() ? 0.0 : *std::max_element(alphas.begin(), alphas.end());
}

double HestenesScheme::residual() const
{
    long double r = 0.0L;
    for (int k = 0; k <= order; ++k) {
        long double s = 0.0L;
        for (size_t i = 0; i < alphas.size(); ++i)
            s += coeffs_ld[i] * std::pow(-static_cast<long double>(alphas[i]), k);
        r = std::max(r, std::abs(s - 1.0L));
    }
    return static_cast<double>(r);
}

Extension1D Extension1D::hestenes(HestenesScheme s, double p, double q, int derivative)
{
    if (!(p < q))
        throw DomainError("Extension1D: need p < q");
    Extension1D e;
    e.mode = Mode::hestenes;
    e.p = p;
    e.q = q;
    e.scheme = std::move(s);
    e.derivative = derivative;
    return e;
}

Extension1D Extension1D::callback(double p, double q)
{
    Extension1D e;
    e.mode = Mode::callback;
    e.p = p;
    e.q = q;
    return e;
}

Extension1D Extension1D::zero(double p, double q)
{
    Extension1D e;
    e.mode = Mode::zero;
    e.p = p;
    e.q = q;
    return e;
}

std::pair<double, double> Extension1D::domain() const
{
    if (mode != Mode::hestenes)
        return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    const double d = (q - p) / scheme.max_alpha();
    return {p - d, q + d};
}

cplx extend_1d(const Fn1& w, const Extension1D& ext, double x)
{
    switch (ext.mode) {
    case Extension1D::Mode::callback:
        return w(x);
    case Extension1D::Mode::zero:
        return (x >= ext.p && x <= ext.q) ? w(x) : cplx(0.0);
    case Extension1D::Mode::hestenes:
        break;
    }
    if (x >= ext.p && x <= ext.q)
        return w(x);
    const auto [lo, hi] = ext.domain();
    if (x < lo || x > hi)
        throw OutOfExtension("extend_1d: x = " + std::to_string(x) + " outside the extension domain");
    const double e = x > ext.q ? ext.q : ext.p;
    cplx s = 0.0;
    for (size_t i = 0; i < ext.scheme.alphas.size(); ++i) {
        const double a = ext.scheme.alphas[i];
        s += ext.scheme.coeffs[i] * std::pow(-a, ext.derivative) * w(-a * (x - e) + e);
    }
    return s;
}

cplxl extend_1d(const Fn1L& w, const Extension1D& ext, long double x)
{
    using ld = long double;
    switch (ext.mode) {
    case Extension1D::Mode::callback:
        return w(x);
    case Extension1D::Mode::zero:
        return (x >= ext.p && x <= ext.q) ? w(x) : cplxl(0.0L);
    case Extension1D::Mode::hestenes:
        break;
    }
    if (x >= ext.p && x <= ext.q)
        return w(x);
    const auto [lo, hi] = ext.domain();
    if (x < lo || x > hi)
        throw OutOfExtension("extend_1d: x = " + std::to_string(static_cast<double>(x)) +
                             " outside the extension domain");
    const ld e = x > ext.q ? ext.q : ext.p;
    cplxl s = 0.0L;
    for (size_t i = 0; i < ext.scheme.alphas.size(); ++i) {
        const ld a = ext.scheme.alphas[i];
        s += ext.scheme.coeffs_ld[i] * std::pow(-a, ext.derivative) * w(-a * (x - e) + e);
    }
    return s;
}

} // namespace schro
