#include "schro/kernels.hpp"

#include "schro/approx.hpp"
#include "schro/error.hpp"

#include <array>
#include <cmath>

namespace schro {

namespace {

constexpr cplx I(0.0, 1.0);

double hermite_weight(int l)
{
    double c = 1.0;
    for (int j = 1; j <= l; ++j)
        c /= -4.0 * j;
    return c;
}

double binom(int n, int k)
{
    double r = 1.0;
    for (int j = 1; j <= k; ++j)
        r = r * (n - k + j) / j;
    return r;
}

void check_M(int M)
{
    if (M < 1 || M > 8)
        throw DomainError("kernel order M outside [1, 8]");
}

// Derivatives p^{(k)}(y), k = 0..2M-2, of p(s) = sum_l (-1)^l/(l! 4^l) H_{2l}(s),
// using d^k H_n = 2^k n!/(n-k)! H_{n-k}.
void p_derivs(int M, double y, double* out)
{
    std::array<double, 16> H{};
    H[0] = 1.0;
    if (2 * M - 2 >= 1)
        H[1] = 2.0 * y;
    for (int j = 1; j < 2 * M - 2; ++j)
        H[j + 1] = 2.0 * y * H[j] - 2.0 * j * H[j - 1];
    for (int k = 0; k <= 2 * M - 2; ++k) {
        double s = 0.0;
        for (int l = 0; l < M; ++l) {
            const int n = 2 * l;
            if (k > n)
                continue;
            double f = hermite_weight(l);
            for (int j = 0; j < k; ++j)
                f *= 2.0 * (n - j);
            s += f * H[n - k];
        }
        out[k] = s;
    }
}

} // namespace

cplx phi_factor(int M, double x, double t)
{
    check_M(M);
    if (t == 0.0)
        return chi(M, x);
    const cplx tc = 1.0 + I * t;
    const cplx z = x * x / tc;
    const cplx e = std::exp(-z);
    cplx s = 0.0;
    cplx pw = 1.0 / std::sqrt(tc);
    for (int l = 0; l < M; ++l) {
        s += pw * laguerre(l, -0.5, z);
        pw /= tc;
    }
    return e * s / sqrt_pi;
}

cplx phi_tensor(int M, const std::vector<double>& xs, double t)
{
    check_M(M);
    if (xs.empty())
        throw DomainError("phi_tensor: empty point");
    const cplx tc = 1.0 + I * t;
    const cplx st = std::sqrt(tc);
    double r2 = 0.0;
    cplx prod = 1.0;
    for (double x : xs) {
        r2 += x * x;
        cplx s = 0.0, pw = 1.0;
        for (int l = 0; l < M; ++l) {
            s += hermite_weight(l) * pw * hermite(2 * l, x / st);
            pw /= tc;
        }
        prod *= s;
    }
    const double n = static_cast<double>(xs.size());
    return std::exp(-r2 / tc) / std::pow(pi * tc, 0.5 * n) * prod;
}

cplx phi_radial(int M, const std::vector<double>& xs, double t)
{
    check_M(M);
    if (xs.empty())
        throw DomainError("phi_radial: empty point");
    const cplx tc = 1.0 + I * t;
    double r2 = 0.0;
    for (double x : xs)
        r2 += x * x;
    const double n = static_cast<double>(xs.size());
    const cplx z = r2 / tc;
    cplx s = 0.0, pw = 1.0;
    for (int j = 0; j < M; ++j) {
        s += pw * laguerre(j, 0.5 * n - 1.0, z);
        pw /= tc;
    }
    return std::exp(-z) / std::pow(pi * tc, 0.5 * n) * s;
}

cplx f_arg(double x, cplx tc, double y)
{
    if (tc == 0.0)
        throw DomainError("f_arg: tc = 0");
    return std::sqrt((tc + 1.0) / tc) * (y - x / (tc + 1.0));
}

cplx p_poly(int M, double x, cplx tc)
{
    check_M(M);
    const cplx u = 1.0 + tc;
    const cplx su = std::sqrt(u);
    cplx s = 0.0;
    cplx pw = 1.0 / su;
    for (int l = 0; l < M; ++l) {
        s += hermite_weight(l) * pw * hermite(2 * l, x / su);
        pw /= u;
    }
    return s;
}

cplx q_poly(int M, double x, cplx tc, double y)
{
    check_M(M);
    if (tc == 0.0)
        throw DomainError("q_poly: tc = 0");
    if (M == 1)
        return 0.0;
    const cplx u = 1.0 + tc;
    const cplx su = std::sqrt(u);
    const cplx st = std::sqrt(tc);
    const cplx F = f_arg(x, tc, y);
    const cplx yx = (y - x) / st;
    cplx total = 0.0;
    for (int k = 1; k < M; ++k) {
        const cplx uk = std::pow(u, k + 0.5);
        cplx inner = 0.0;
        for (int l = 1; l <= 2 * k; ++l) {
            const cplx tl = std::pow(st, l);
            const cplx a = hermite(2 * k - l, cplx(y)) * hermite(l - 1, yx);
            const cplx b = binom(2 * k, l) * hermite(2 * k - l, x / su) * hermite(l - 1, F) / uk;
            inner += ((l % 2) ? -1.0 : 1.0) / tl * (a - b);
        }
        total += hermite_weight(k) * inner;
    }
    return 2.0 * total;
}

cplx psi_naive(int M, double x, double t, double y)
{
    if (t == 0.0)
        throw DomainError("psi_naive: t = 0");
    const cplx tc = I * t;
    const cplx F = f_arg(x, tc, y);
    if (std::abs(F) > 25.0)
        throw OverflowError("psi_naive: |F| > 25");
    return std::exp(-x * x / (1.0 + tc)) / (2.0 * sqrt_pi) *
           (erfc_complex(F) * p_poly(M, x, tc) - std::exp(-F * F) * q_poly(M, x, tc, y) / sqrt_pi);
}

cplx psi_literal(int M, double x, double t, double y)
{
    if (t == 0.0)
        throw DomainError("psi_literal: t = 0");
    const cplx tc = I * t;
    const cplx F = f_arg(x, tc, y);
    const double ph = (y - x) * (y - x) / t;
    const cplx pre = (y * y > 700.0 || !std::isfinite(ph)) ? cplx(0.0) : std::exp(-y * y) * std::polar(1.0, ph);
    const cplx P = p_poly(M, x, tc);
    cplx r = -pre * q_poly(M, x, tc, y) / (2.0 * pi);
    if (F.real() >= 0)
        r += pre * faddeeva(I * F) * P / (2.0 * sqrt_pi);
    else
        r += (2.0 * std::exp(-x * x / (1.0 + tc)) - pre * faddeeva(-I * F)) * P / (2.0 * sqrt_pi);
    return r;
}

namespace {

// Psi = tail for Re F >= 0, Psi = phi - tail otherwise.
struct PsiParts {
    cplx tail;
    bool pos;
};

PsiParts psi_parts(int M, double x, double t, double y)
{
    // tail = pre/(2 sqrt(pi) sqrt(1+it)) sum_k p^{(k)}(y) (+-alpha)^{-k} G_k(+-F),
    // alpha = sqrt((1+it)/(it)), G_k(z) = exp(z^2) i^k erfc(z), pre = exp(-y^2 + i(y-x)^2/t).
    const cplx tc = I * t;
    const cplx alpha = std::sqrt((1.0 + tc) / tc);
    const cplx F = alpha * (y - x / (1.0 + tc));
    const bool pos = F.real() >= 0;
    const double ph = (y - x) * (y - x) / t;
    if (y * y > 700.0 || !std::isfinite(ph))
        return {0.0, pos};
    const cplx z = pos ? F : -F;
    const int K = 2 * M - 2;
    std::array<double, 16> pd{};
    std::array<cplx, 16> G{};
    p_derivs(M, y, pd.data());
    ierfc_scaled(K, z, G.data());
    const cplx inv = 1.0 / (pos ? alpha : -alpha);
    cplx pw = 1.0, s = 0.0;
    for (int k = 0; k <= K; ++k) {
        s += pd[k] * pw * G[k];
        pw *= inv;
    }
    return {std::exp(-y * y) * std::polar(1.0, ph) * s / (2.0 * sqrt_pi * std::sqrt(1.0 + tc)), pos};
}

} // namespace

cplx psi(int M, double x, double t, double y)
{
    check_M(M);
    if (t == 0.0)
        throw DomainError("psi: t = 0");
    if (t < 0.0)
        return std::conj(psi(M, x, -t, y));
    const PsiParts a = psi_parts(M, x, t, y);
    return a.pos ? a.tail : phi_factor(M, x, t) - a.tail;
}

cplx box_factor(int M, double x, double t, double P, double Q)
{
    check_M(M);
    if (!(P < Q))
        throw DomainError("box_factor: need P < Q");
    if (t == 0.0)
        throw DomainError("box_factor: t = 0");
    if (t < 0.0)
        return std::conj(box_factor(M, x, -t, P, Q));
    const PsiParts a = psi_parts(M, x, t, P);
    const PsiParts b = psi_parts(M, x, t, Q);
    if (a.pos == b.pos)
        return a.pos ? a.tail - b.tail : b.tail - a.tail;
    const cplx phi = phi_factor(M, x, t);
    return a.pos ? a.tail - (phi - b.tail) : (phi - a.tail) - b.tail;
}

} // namespace schro
