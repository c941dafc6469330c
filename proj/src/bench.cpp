#include "schro/bench.hpp"

#include "schro/error.hpp"
#include "schro/kernels.hpp"

#include <array>
#include <charconv>
#include <limits>
#include <cmath>
#include <ostream>
#include <string>

namespace schro {

namespace {

constexpr cplx I{0.0, 1.0};

struct Legendre {
    static constexpr int n = 16;
    std::array<double, n> x{}, w{};
    Legendre()
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

const Legendre& legendre()
{
    static const Legendre rule;
    return rule;
}

// Returns the integral and the integral of |f| on [a, b].
std::pair<cplx, double> panel(const Fn1& f, double a, double b)
{
    const auto& g = legendre();
    const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    cplx s = 0.0;
    double m = 0.0;
    for (int i = 0; i < Legendre::n; ++i) {
        const cplx v = f(c + hw * g.x[i]);
        s += g.w[i] * v;
        m += g.w[i] * std::abs(v);
    }
    return {hw * s, hw * m};
}

std::string fmt(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace

cplx adaptive_integral(const Fn1& f, double a, double b, double rtol, double atol)
{
    if (!(a < b))
        throw DomainError("adaptive_integral: need a < b");
    // A uniform pass fixes the scale against which panels are accepted.
    constexpr int start = 64;
    std::vector<std::pair<double, double>> work;
    double scale = 0.0;
    for (int k = 0; k < start; ++k) {
        const double lo = a + (b - a) * k / start, hi = a + (b - a) * (k + 1) / start;
        scale += panel(f, lo, hi).second;
        work.emplace_back(lo, hi);
    }
    const double tol = std::max(rtol * scale, atol);
    cplx total = 0.0;
    long evals = 0;
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        const double mid = 0.5 * (lo + hi);
        const cplx whole = panel(f, lo, hi).first;
        const cplx halves = panel(f, lo, mid).first + panel(f, mid, hi).first;
        if (std::abs(whole - halves) <= tol * (hi - lo) / (b - a) || hi - lo < 1e-12 * (b - a)) {
            if (hi - lo < 1e-12 * (b - a) && std::abs(whole - halves) > tol * (hi - lo) / (b - a))
                throw ToleranceNotReached("adaptive_integral: panel width underflow near " + fmt(mid));
            total += halves;
        } else {
            work.emplace_back(lo, mid);
            work.emplace_back(mid, hi);
        }
        if (++evals > 2000000)
            throw ToleranceNotReached("adaptive_integral: panel budget exhausted");
    }
    return total;
}

cplx exact_gaussian_box(double a, const std::vector<double>& x, double t)
{
    if (!(t > 0))
        throw DomainError("exact_gaussian_box: t <= 0");
    const cplx s = std::sqrt(t) * std::sqrt(4.0 * t + I);
    cplx u = 1.0;
    for (double xj : x) {
        const cplx e1 = erfc_complex((4.0 * I * (a + 1.0) * t + xj - 1.0) / (2.0 * s));
        const cplx e2 = erfc_complex((4.0 * I * (a - 1.0) * t + xj + 1.0) / (2.0 * s));
        u *= I * std::exp((a + xj) * (a + xj) / (1.0 - 4.0 * I * t)) / (2.0 * std::sqrt(4.0 * I * t - 1.0)) * (e1 - e2);
    }
    return u;
}

cplx manufactured_rhs(const Fn1& w, const Fn1& w1, const Fn1& w2, const Fn1& v, const Fn1& v1,
                      const std::vector<double>& x, double t)
{
    (void)w1;
    const size_t n = x.size();
    std::vector<cplx> wv(n), w2v(n);
    cplx prod = 1.0;
    for (size_t j = 0; j < n; ++j) {
        wv[j] = w(x[j]);
        w2v[j] = w2(x[j]);
        prod *= wv[j];
    }
    cplx lap = 0.0;
    for (size_t j = 0; j < n; ++j) {
        cplx p = w2v[j];
        for (size_t k = 0; k < n; ++k)
            if (k != j)
                p *= wv[k];
        lap += p;
    }
    return I * v1(t) * prod + v(t) * lap;
}

cplx direct_oracle_free(const Fn1& g, double p, double q, double x, double t, double rtol)
{
    if (!(t > 0))
        throw DomainError("direct_oracle_free: t <= 0");
    const cplx pre = 1.0 / std::sqrt(4.0 * pi * I * t);
    auto f = [&](double y) { return std::exp(I * ((x - y) * (x - y) / (4.0 * t))) * g(y); };
    return pre * adaptive_integral(f, p, q, rtol, 1e-300);
}

namespace problems {

Extension1D spatial_extension(Extension1D::Mode mode, const HestenesScheme& s, int derivative)
{
    switch (mode) {
    case Extension1D::Mode::hestenes:
        return Extension1D::hestenes(s, -1.0, 1.0, derivative);
    case Extension1D::Mode::callback:
        return Extension1D::callback(-1.0, 1.0);
    case Extension1D::Mode::zero:
        break;
    }
    return Extension1D::zero(-1.0, 1.0);
}

cplx table3_field(int M, double h, Extension1D::Mode mode, const HestenesScheme& s, const std::vector<double>& x,
                  double t, double D, double r)
{
    CubatureParams p;
    p.M = M;
    p.h = h;
    p.D = D;
    p.r = r;
    const auto [lo, hi] = spatial_window(-1.0, 1.0, p);
    const long double a = gauss_shift;
    Fn1L w = [a](long double y) { return cplxl(std::exp((y + a) * (y + a))); };
    auto g = SeparatedFunction::rank_one(x.size(), sample_factor(w, spatial_extension(mode, s), h, lo, hi));
    return box_field(g, Box::cube(x.size(), -1.0, 1.0), p, x, t);
}

namespace {

cplxl mw(int which, long double x)
{
    if (which == 1) {
        const long double c = std::cos(2.5L * static_cast<long double>(pi) * x);
        return c * c;
    }
    const long double u = x * x - 1.0L;
    return std::polar(1.0L, 4.0L * x) * (u * u);
}

cplxl mw2(int which, long double x)
{
    if (which == 1) {
        const long double k = 5.0L * static_cast<long double>(pi);
        return -0.5L * k * k * std::cos(k * x);
    }
    const long double u = x * x - 1.0L;
    const cplxl i(0.0L, 1.0L);
    return std::polar(1.0L, 4.0L * x) * (-16.0L * u * u + 32.0L * i * x * u + 12.0L * x * x - 4.0L);
}

} // namespace

cplx manufactured_exact(int which, const std::vector<double>& x, double t)
{
    if (which != 1 && which != 2)
        throw DomainError("manufactured problem must be 1 or 2");
    cplx u = t;
    for (double xj : x)
        u *= cplx(mw(which, xj));
    return u;
}

cplx manufactured_field(int which, int M, double h, double tau, Extension1D::Mode mode, const HestenesScheme& s,
                        const MoriRule& rule, const std::vector<double>& x, double t, double D, double D0,
                        double r, double r0, unsigned threads)
{
    if (which != 1 && which != 2)
        throw DomainError("manufactured problem must be 1 or 2");
    CubatureParams p{M, D, D0, h, tau, r, r0};
    p.validate();
    const auto [lo, hi] = spatial_window(-1.0, 1.0, p);
    const auto [llo, lhi] = time_window(t, p);
    Fn1L w = [which](long double y) { return mw(which, y); };
    Fn1L w2 = [which](long double y) { return mw2(which, y); };
    const FactorPtr W = sample_factor(w, spatial_extension(mode, s), h, lo, hi);
    const FactorPtr W2 = sample_factor(w2, spatial_extension(mode, s, 2), h, lo, hi);

    // v(t) = t continued to t < 0 with the same extension rule.
    Extension1D text = Extension1D::zero(0.0, std::numeric_limits<double>::infinity());
    if (mode == Extension1D::Mode::hestenes)
        text = Extension1D::hestenes(s, 0.0, std::numeric_limits<double>::infinity());
    else if (mode == Extension1D::Mode::callback)
        text = Extension1D::callback(0.0, std::numeric_limits<double>::infinity());
    Fn1 v = [](double s) { return cplx(s); };
    Fn1 one = [](double) { return cplx(1.0); };
    Fn1 vext = [&](double s) { return extend_1d(v, text, s); };
    Fn1 v1ext = [&](double s) { return extend_1d(one, text, s); };

    auto with_theta = [&](const FactorPtr& base, const Fn1& theta) {
        auto tb = std::make_shared<FactorTable>(*base);
        tb->l_lo = llo;
        for (long l = llo; l <= lhi; ++l)
            tb->theta.push_back(theta(tau * l));
        return FactorPtr(tb);
    };
    const FactorPtr Wd = with_theta(W, v1ext);
    const FactorPtr W2v = with_theta(W2, vext);

    // Rank 0: i v'(t) prod w; rank j: v(t) w''(x_j) prod_{k != j} w(x_k).
    const size_t n = x.size();
    SeparatedFunction f;
    f.weights.push_back(I);
    f.factors.push_back(std::vector<FactorPtr>(n, W));
    f.factors[0][0] = Wd;
    for (size_t j = 0; j < n; ++j) {
        f.weights.push_back(1.0);
        std::vector<FactorPtr> row(n, W);
        row[j] = W2v;
        f.factors.push_back(std::move(row));
    }
    return duhamel_field(f, Box::cube(n, -1.0, 1.0), p, rule, x, t, threads);
}

cplx free_gaussian_exact(const std::vector<double>& x, double t)
{
    const cplx d = 1.0 + 4.0 * I * t;
    cplx u = 1.0;
    for (double xj : x)
        u *= std::exp(-xj * xj / d) / std::sqrt(d);
    return u;
}

cplx free_gaussian_field(int M, double h, const std::vector<double>& x, double t, double D, double r)
{
    CubatureParams p;
    p.M = M;
    p.h = h;
    p.D = D;
    p.r = r;
    const long span = static_cast<long>(std::ceil(7.0 / h + r * std::sqrt(D)));
    Fn1 g = [](double y) { return cplx(std::exp(-y * y)); };
    auto tab = sample_factor(g, Extension1D::callback(-7.0, 7.0), h, -span, span);
    return free_field(SeparatedFunction::rank_one(x.size(), tab), p, x, t);
}

} // namespace problems

std::vector<ConvergenceRow> run_convergence(const RunConfig& cfg, unsigned threads)
{
    const auto x = cfg.eval_point();
    const double t = cfg.t.front();
    std::vector<ConvergenceRow> rows;
    for (int M : cfg.M) {
        const HestenesScheme s = cfg.scheme(2 * M);
        for (size_t i = 0; i < cfg.h_levels.size(); ++i) {
            const double h = cfg.h_levels[i];
            ConvergenceRow row{cfg.n, M, h, std::nullopt, 0.0, std::nullopt};
            cplx approx, exact;
            if (cfg.problem == "table3") {
                approx = problems::table3_field(M, h, cfg.mode(), s, x, t, cfg.D, cfg.r);
                exact = exact_gaussian_box(problems::gauss_shift, x, t);
            } else if (cfg.problem == "table1" || cfg.problem == "table2") {
                const int which = cfg.problem == "table1" ? 1 : 2;
                row.tau = cfg.tau_levels[i];
                approx = problems::manufactured_field(which, M, h, *row.tau, cfg.mode(), s, cfg.quad, x, t, cfg.D,
                                                      cfg.D0, cfg.r, cfg.r0, threads);
                exact = problems::manufactured_exact(which, x, t);
            } else if (cfg.problem == "free-gaussian") {
                approx = problems::free_gaussian_field(M, h, x, t, cfg.D, cfg.r);
                exact = problems::free_gaussian_exact(x, t);
            } else {
                throw ConfigError("problem " + cfg.problem + " has no convergence table");
            }
            row.abs_error = std::abs(approx - exact);
            if (i > 0)
                row.rate = std::log2(rows.back().abs_error / row.abs_error);
            rows.push_back(row);
        }
    }
    return rows;
}

namespace {

void write_provenance(std::ostream& os, const RunConfig& cfg)
{
    for (const auto& [k, v] : cfg.provenance())
        os << "# " << k << '=' << v << '\n';
}

} // namespace

void write_convergence_csv(std::ostream& os, const RunConfig& cfg, const std::vector<ConvergenceRow>& rows)
{
    write_provenance(os, cfg);
    os << "n,M,h,tau,abs_error,rate\n";
    for (const auto& r : rows)
        os << r.n << ',' << r.M << ',' << fmt(r.h) << ',' << (r.tau ? fmt(*r.tau) : "") << ',' << fmt(r.abs_error)
           << ',' << (r.rate ? fmt(*r.rate) : "") << '\n';
}

namespace {

constexpr double slice_speed[2] = {30.0, -30.0};

FactorPtr slice_table(int axis, double h, double r, double D)
{
    // exp(-60 x^2) < 1e-30 beyond |x| = 1.07
    const long span = static_cast<long>(std::ceil(1.1 / h + r * std::sqrt(D)));
    const double c = slice_speed[axis];
    Fn1 w = [c](double y) { return std::polar(std::exp(-60.0 * y * y), c * y); };
    return sample_factor(w, Extension1D::callback(-1.1, 1.1), h, -span, span);
}

cplx slice_axis(const FactorPtr& tab, const CubatureParams& p, double x, double t)
{
    return free_field(SeparatedFunction::rank_one(1, tab), p, {x}, t);
}

CubatureParams slice_params(const RunConfig& cfg)
{
    if (cfg.n != 2)
        throw ConfigError("field-slice needs n = 2");
    CubatureParams p;
    p.M = cfg.M.front();
    p.h = cfg.h_levels.front();
    p.D = cfg.D;
    p.r = cfg.r;
    p.validate();
    return p;
}

} // namespace

cplx field_slice_value(const RunConfig& cfg, double x1, double x2, double t)
{
    const CubatureParams p = slice_params(cfg);
    return slice_axis(slice_table(0, p.h, p.r, p.D), p, x1, t) * slice_axis(slice_table(1, p.h, p.r, p.D), p, x2, t);
}

void run_field_slice(const RunConfig& cfg, std::ostream& os)
{
    const CubatureParams p = slice_params(cfg);
    if (cfg.grid.size() != 2)
        throw ConfigError("field-slice needs a two-axis grid in point");
    const FactorPtr tabs[2] = {slice_table(0, p.h, p.r, p.D), slice_table(1, p.h, p.r, p.D)};
    auto axis_nodes = [](const RunConfig::Axis& a) {
        std::vector<double> v(a.count);
        for (int i = 0; i < a.count; ++i)
            v[i] = a.count == 1 ? a.lo : a.lo + (a.hi - a.lo) * i / (a.count - 1);
        return v;
    };
    const auto X1 = axis_nodes(cfg.grid[0]), X2 = axis_nodes(cfg.grid[1]);
    write_provenance(os, cfg);
    os << "x1,x2,t,re_u,im_u,abs_u\n";
    for (double t : cfg.t) {
        std::vector<cplx> s1(X1.size()), s2(X2.size());
        for (size_t i = 0; i < X1.size(); ++i)
            s1[i] = slice_axis(tabs[0], p, X1[i], t);
        for (size_t j = 0; j < X2.size(); ++j)
            s2[j] = slice_axis(tabs[1], p, X2[j], t);
        for (size_t i = 0; i < X1.size(); ++i)
            for (size_t j = 0; j < X2.size(); ++j) {
                const cplx u = s1[i] * s2[j];
                os << fmt(X1[i]) << ',' << fmt(X2[j]) << ',' << fmt(t) << ',' << fmt(u.real()) << ','
                   << fmt(u.imag()) << ',' << fmt(std::abs(u)) << '\n';
            }
    }
}

} // namespace schro
