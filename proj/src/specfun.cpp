#include "schro/specfun.hpp"

#include "schro/error.hpp"

#include <array>
#include <cmath>
#include <string>

namespace schro {

namespace {

inline double mag2(cplx z) { return z.real() * z.real() + z.imag() * z.imag(); }

void check_order(int k)
{
    if (k < 0 || k > max_poly_order)
        throw OrderTooLarge("polynomial order " + std::to_string(k) + " outside [0, 64]");
}

template <class T>
T hermite_rec(int k, T z)
{
    check_order(k);
    T h0 = T(1);
    if (k == 0)
        return h0;
    T h1 = T(2) * z;
    for (int j = 1; j < k; ++j) {
        T h2 = T(2) * z * h1 - T(2.0 * j) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

// Weideman's rational approximation, N = 40 terms.
struct Weideman {
    static constexpr int N = 40;
    double L;
    std::array<double, N + 1> a{};

    Weideman()
    {
        const int M = 2 * N;
        const long double Ll = std::sqrt(static_cast<long double>(N) / std::sqrt(2.0L));
        const long double pil = 3.141592653589793238462643383279502884L;
        L = static_cast<double>(Ll);
        for (int n = 1; n <= N; ++n) {
            long double s = 0;
            for (int k = -M + 1; k < M; ++k) {
                long double t = Ll * std::tan(k * pil / (2 * M));
                long double f = std::exp(-t * t) * (Ll * Ll + t * t);
                s += f * std::cos(pil * n * k / M);
            }
            a[n] = static_cast<double>(s / (2 * M));
        }
    }

    cplx operator()(cplx z) const
    {
        const cplx iz(-z.imag(), z.real());
        const cplx den = L - iz;
        const cplx Z = (L + iz) / den;
        cplx p = a[N];
        for (int n = N - 1; n >= 1; --n)
            p = p * Z + a[n];
        return 2.0 * p / (den * den) + 1.0 / (sqrt_pi * den);
    }
};

const Weideman& weideman()
{
    static const Weideman w;
    return w;
}

cplx faddeeva_taylor(cplx z)
{
    // sum_n (iz)^n / Gamma(n/2 + 1)
    const cplx iz(-z.imag(), z.real());
    double ce = 1.0, co = 2.0 / sqrt_pi;
    cplx pw = 1.0, s = 0.0;
    for (int n = 0; n < 40; n += 2) {
        s += ce * pw;
        pw *= iz;
        s += co * pw;
        pw *= iz;
        ce /= (n / 2.0 + 1.0);
        co /= (n / 2.0 + 1.5);
    }
    return s;
}

cplx faddeeva_cf(cplx z)
{
    cplx r = 0.0;
    for (int k = 40; k >= 1; --k)
        r = (0.5 * k) / (z - r);
    return cplx(0.0, 1.0 / sqrt_pi) / (z - r);
}

} // namespace

double hermite(int k, double x) { return hermite_rec(k, x); }
cplx hermite(int k, cplx z) { return hermite_rec(k, z); }

cplx laguerre(int k, double gamma, cplx z)
{
    check_order(k);
    cplx l0 = 1.0;
    if (k == 0)
        return l0;
    cplx l1 = 1.0 + gamma - z;
    for (int j = 1; j < k; ++j) {
        cplx l2 = ((2.0 * j + 1.0 + gamma - z) * l1 - (j + gamma) * l0) / (j + 1.0);
        l0 = l1;
        l1 = l2;
    }
    return l1;
}

cplx faddeeva(cplx z)
{
    if (z.imag() < 0)
        throw DomainError("faddeeva: Im z < 0");
    const double r2 = mag2(z);
    if (r2 < 0.25)
        return faddeeva_taylor(z);
    if (r2 < 36.0)
        return weideman()(z);
    return faddeeva_cf(z);
}

cplx erfc_complex(cplx z)
{
    const cplx mz2 = -z * z;
    if (mz2.real() > 709.0)
        throw OverflowError("erfc_complex: exp(-z^2) overflows");
    const cplx e = std::exp(mz2);
    if (z.real() >= 0)
        return e * faddeeva(cplx(-z.imag(), z.real()));
    return 2.0 - e * faddeeva(cplx(z.imag(), -z.real()));
}

namespace {

struct PanelRule {
    static constexpr int n = 24;
    double x[n], w[n];
    PanelRule()
    {
        for (int i = 0; i < n; ++i) {
            double t = std::cos(pi * (i + 0.75) / (n + 0.5)), dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int j = 2; j <= n; ++j) {
                    const double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (t * p1 - p0) / (t * t - 1.0);
                const double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16)
                    break;
            }
            x[i] = t;
            w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

// G_k(z) = 2/(sqrt(pi) k!) int_0^inf u^k exp(-u^2 - 2 z u) du, four panels on [0, 6.5].
void ierfc_quadrature(int K, cplx z, cplx* out)
{
    static const PanelRule rule;
    std::array<cplx, 17> acc{};
    constexpr int panels = 4;
    constexpr double L = 6.5;
    for (int p = 0; p < panels; ++p) {
        const double a = L * p / panels, half = 0.5 * L / panels;
        for (int i = 0; i < PanelRule::n; ++i) {
            const double u = a + half * (1.0 + rule.x[i]);
            cplx e = half * rule.w[i] * std::exp(-u * u - 2.0 * z * u);
            for (int k = 0; k <= K; ++k) {
                acc[k] += e;
                e *= u / double(k + 1);
            }
        }
    }
    for (int k = 0; k <= K; ++k)
        out[k] = 2.0 / sqrt_pi * acc[k];
}

} // namespace

void ierfc_scaled(int K, cplx z, cplx* out)
{
    if (z.real() < 0)
        throw DomainError("ierfc_scaled: Re z < 0");
    if (K < 0 || K > 16)
        throw OrderTooLarge("ierfc_scaled: K outside [0, 16]");
    const double r2 = mag2(z);
    if (r2 >= 64.0) {
        const cplx u = 1.0 / (2.0 * z);
        const cplx u2 = u * u;
        cplx uk = u;
        for (int k = 0; k <= K; ++k) {
            cplx term = uk, s = 0.0;
            for (int j = 0; j < 80; ++j) {
                s += term;
                if (mag2(term) <= 1e-36 * mag2(s))
                    break;
                term *= -u2 * double((k + 2 * j + 1) * (k + 2 * j + 2)) / double(j + 1);
            }
            out[k] = 2.0 / sqrt_pi * s;
            uk *= u;
        }
        return;
    }
    if (r2 >= 4.0 && z.real() < 1.0) {
        ierfc_quadrature(K, z, out);
        return;
    }
    const cplx g0 = faddeeva(cplx(-z.imag(), z.real()));
    out[0] = g0;
    if (K == 0)
        return;
    if (r2 < 4.0) {
        cplx a = 2.0 / sqrt_pi, b = g0;
        for (int k = 1; k <= K; ++k) {
            cplx c = (-z * b + 0.5 * a) / double(k);
            out[k] = c;
            a = b;
            b = c;
        }
        return;
    }
    // Miller's backward recurrence, normalized by G_0.
    const int N = K + 150;
    std::array<cplx, 170> seq{};
    seq[N + 1] = 0.0;
    seq[N] = 1.0;
    for (int k = N + 1; k >= 2; --k) {
        seq[k - 2] = 2.0 * (double(k) * seq[k] + z * seq[k - 1]);
        if (std::max(std::abs(seq[k - 2].real()), std::abs(seq[k - 2].imag())) > 1e250)
            for (int j = k - 2; j <= N + 1; ++j)
                seq[j] *= 1e-250;
    }
    const cplx s = g0 / seq[0];
    for (int k = 1; k <= K; ++k)
        out[k] = seq[k] * s;
}

} // namespace schro
