#include "schro/propagate.hpp"

#include "schro/error.hpp"
#include "schro/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <exception>
#include <string>
#include <thread>

namespace schro {

void CubatureParams::validate() const
{
    if (M < 1 || M > 4)
        throw DomainError("CubatureParams: M outside [1, 4]");
    if (!(h > 0) || !(tau > 0))
        throw DomainError("CubatureParams: need h, tau > 0");
    if (!(r >= 1) || !(r0 >= 1))
        throw DomainError("CubatureParams: need r, r0 >= 1");
    GeneratingSpec{M, D, D0}.validate();
}

Box Box::cube(size_t n, double lo, double hi)
{
    return {std::vector<double>(n, lo), std::vector<double>(n, hi)};
}

void Box::validate() const
{
    if (P.size() != Q.size() || P.empty())
        throw DomainError("Box: corner dimensions differ or are empty");
    for (size_t j = 0; j < P.size(); ++j)
        if (!(P[j] < Q[j]))
            throw DomainError("Box: need P_j < Q_j");
}

bool FactorTable::covers_l(long lo, long hi) const
{
    if (separable())
        return lo >= l_lo && hi < l_lo + static_cast<long>(theta.size());
    if (full())
        return lo >= l_lo && hi < l_lo + nl;
    return true;
}

cplx FactorTable::at(long m, long ell) const
{
    if (m < m_lo || m >= m_lo + m_count)
        return 0.0;
    if (full())
        return values[(ell - l_lo) * m_count + (m - m_lo)];
    if (separable())
        return values[m - m_lo] * theta[ell - l_lo];
    return values[m - m_lo];
}

void SeparatedFunction::validate() const
{
    if (weights.empty() || factors.size() != weights.size())
        throw DomainError("SeparatedFunction: rank mismatch");
    const size_t n = factors[0].size();
    if (n == 0)
        throw DomainError("SeparatedFunction: zero dimension");
    for (const auto& row : factors) {
        if (row.size() != n)
            throw DomainError("SeparatedFunction: ranks differ in dimension");
        for (const auto& f : row)
            if (!f)
                throw DomainError("SeparatedFunction: missing factor table");
    }
}

SeparatedFunction SeparatedFunction::rank_one(size_t n, FactorPtr f, cplx weight)
{
    SeparatedFunction g;
    g.weights = {weight};
    g.factors = {std::vector<FactorPtr>(n, std::move(f))};
    return g;
}

FactorPtr sample_factor(const Fn1& w, const Extension1D& ext, double h, long m_lo, long m_hi)
{
    auto t = std::make_shared<FactorTable>();
    t->m_lo = m_lo;
    t->m_count = m_hi - m_lo + 1;
    t->values.reserve(t->m_count);
    for (long m = m_lo; m <= m_hi; ++m)
        t->values.push_back(extend_1d(w, ext, h * m));
    return t;
}

FactorPtr sample_factor(const Fn1L& w, const Extension1D& ext, double h, long m_lo, long m_hi)
{
    auto t = std::make_shared<FactorTable>();
    t->m_lo = m_lo;
    t->m_count = m_hi - m_lo + 1;
    t->values.reserve(t->m_count);
    for (long m = m_lo; m <= m_hi; ++m) {
        const cplxl v = extend_1d(w, ext, static_cast<long double>(m) * h);
        t->values.emplace_back(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    }
    return t;
}

FactorPtr sample_separable(const Fn1& w, const Extension1D& ext, double h, long m_lo, long m_hi,
                           const Fn1& theta, double tau, long l_lo, long l_hi)
{
    auto t = std::make_shared<FactorTable>(*sample_factor(w, ext, h, m_lo, m_hi));
    t->l_lo = l_lo;
    for (long l = l_lo; l <= l_hi; ++l)
        t->theta.push_back(theta(tau * l));
    return t;
}

FactorPtr sample_space_time(const std::function<cplx(double, double)>& f, double h, long m_lo, long m_hi,
                            double tau, long l_lo, long l_hi)
{
    auto t = std::make_shared<FactorTable>();
    t->m_lo = m_lo;
    t->m_count = m_hi - m_lo + 1;
    t->l_lo = l_lo;
    t->nl = l_hi - l_lo + 1;
    for (long l = l_lo; l <= l_hi; ++l)
        for (long m = m_lo; m <= m_hi; ++m)
            t->values.push_back(f(h * m, tau * l));
    return t;
}

std::pair<long, long> spatial_window(double P, double Q, const CubatureParams& p)
{
    const double w = p.r * std::sqrt(p.D);
    return {static_cast<long>(std::ceil(P / p.h - w)), static_cast<long>(std::floor(Q / p.h + w))};
}

std::pair<long, long> time_window(double t, const CubatureParams& p)
{
    const double w = p.r0 * std::sqrt(p.D0);
    return {static_cast<long>(std::floor(-w)), static_cast<long>(std::ceil(t / p.tau + w))};
}

namespace {

// Distinct evaluation coordinates and distinct (table, coordinate) sums.
struct Plan {
    struct Dim {
        double x, P, Q;
        long lo, hi;
        std::vector<cplx> B;
    };
    struct Sum {
        const FactorTable* table;
        int d;
        cplx value;
        std::vector<cplx> row; // per ell, full tables only
    };
    std::vector<Dim> dims;
    std::vector<Sum> sums;
    std::vector<std::vector<int>> idx;

    Plan(const SeparatedFunction& g, const std::vector<double>& x, const Box* box, const CubatureParams& p)
    {
        g.validate();
        const size_t n = g.dim();
        if (x.size() != n)
            throw DomainError("evaluation point dimension " + std::to_string(x.size()) + " != " + std::to_string(n));
        if (box && box->dim() != n)
            throw DomainError("box dimension differs from function dimension");
        std::vector<int> dim_of(n);
        for (size_t j = 0; j < n; ++j) {
            const double P = box ? box->P[j] : 0.0, Q = box ? box->Q[j] : 0.0;
            int found = -1;
            for (size_t d = 0; d < dims.size(); ++d)
                if (dims[d].x == x[j] && dims[d].P == P && dims[d].Q == Q) {
                    found = static_cast<int>(d);
                    break;
                }
            if (found < 0) {
                Dim dm{x[j], P, Q, 0, -1, {}};
                if (box) {
                    auto [lo, hi] = spatial_window(P, Q, p);
                    dm.lo = lo;
                    dm.hi = hi;
                }
                dims.push_back(dm);
                found = static_cast<int>(dims.size()) - 1;
            }
            dim_of[j] = found;
        }
        std::map<std::pair<const FactorTable*, int>, int> seen;
        idx.assign(g.rank(), std::vector<int>(n));
        for (size_t r = 0; r < g.rank(); ++r)
            for (size_t j = 0; j < n; ++j) {
                const FactorTable* t = g.factors[r][j].get();
                const int d = dim_of[j];
                auto key = std::make_pair(t, d);
                auto it = seen.find(key);
                if (it == seen.end()) {
                    it = seen.emplace(key, static_cast<int>(sums.size())).first;
                    sums.push_back({t, d, 0.0, {}});
                    Dim& dm = dims[d];
                    if (box) {
                        if (!t->covers_m(dm.lo, dm.hi))
                            throw DomainError("factor table does not cover the box window");
                    } else {
                        const long lo = t->m_lo, hi = t->m_lo + t->m_count - 1;
                        if (dm.hi < dm.lo) {
                            dm.lo = lo;
                            dm.hi = hi;
                        } else {
                            dm.lo = std::min(dm.lo, lo);
                            dm.hi = std::max(dm.hi, hi);
                        }
                    }
                }
                idx[r][j] = it->second;
            }
        for (auto& dm : dims)
            dm.B.resize(dm.hi - dm.lo + 1);
    }

    // Spatial sums for time-independent or separable tables.
    void spatial_sums()
    {
        for (auto& s : sums) {
            if (s.table->full())
                continue;
            const Dim& dm = dims[s.d];
            const long lo = std::max(dm.lo, s.table->m_lo);
            const long hi = std::min(dm.hi, s.table->m_lo + s.table->m_count - 1);
            cplx acc = 0.0;
            for (long m = lo; m <= hi; ++m)
                acc += s.table->values[m - s.table->m_lo] * dm.B[m - dm.lo];
            s.value = acc;
        }
    }
};

cplx separated_sum(Plan& plan, const SeparatedFunction& g)
{
    plan.spatial_sums();
    cplx total = 0.0;
    for (size_t r = 0; r < g.rank(); ++r) {
        cplx prod = g.weights[r];
        for (int u : plan.idx[r])
            prod *= plan.sums[u].value;
        total += prod;
    }
    return total;
}

void require_static(const SeparatedFunction& g)
{
    for (const auto& row : g.factors)
        for (const auto& f : row)
            if (f->full() || f->separable())
                throw DomainError("time-dependent factor passed to a free or box field");
}

} // namespace

cplx free_field(const SeparatedFunction& g, const CubatureParams& p, const std::vector<double>& x, double t)
{
    p.validate();
    require_static(g);
    Plan plan(g, x, nullptr, p);
    const double sd = std::sqrt(p.D);
    const double ts = 4.0 * t / (p.h * p.h * p.D);
    for (auto& dm : plan.dims)
        for (long m = dm.lo; m <= dm.hi; ++m)
            dm.B[m - dm.lo] = phi_factor(p.M, (dm.x - p.h * m) / (p.h * sd), ts) / sd;
    return separated_sum(plan, g);
}

cplx box_field(const SeparatedFunction& g, const Box& box, const CubatureParams& p, const std::vector<double>& x,
               double t)
{
    p.validate();
    box.validate();
    require_static(g);
    if (t == 0.0)
        throw DomainError("box_field: t = 0");
    Plan plan(g, x, &box, p);
    const double sd = std::sqrt(p.D);
    const double hs = p.h * sd;
    const double ts = 4.0 * t / (p.h * p.h * p.D);
    for (auto& dm : plan.dims)
        for (long m = dm.lo; m <= dm.hi; ++m) {
            const double hm = p.h * m;
            dm.B[m - dm.lo] = box_factor(p.M, (dm.x - hm) / hs, ts, (dm.P - hm) / hs, (dm.Q - hm) / hs) / sd;
        }
    return separated_sum(plan, g);
}

cplx box_field_dense(const FnN& g, const Box& box, const CubatureParams& p, const std::vector<double>& x, double t)
{
    p.validate();
    box.validate();
    const size_t n = box.dim();
    if (n > 3)
        throw DomainError("box_field_dense: only n <= 3");
    if (x.size() != n)
        throw DomainError("box_field_dense: point dimension mismatch");
    if (t == 0.0)
        throw DomainError("box_field_dense: t = 0");
    const double sd = std::sqrt(p.D);
    const double hs = p.h * sd;
    const double ts = 4.0 * t / (p.h * p.h * p.D);
    std::vector<long> lo(n), hi(n), m(n);
    std::vector<std::vector<cplx>> B(n);
    for (size_t j = 0; j < n; ++j) {
        std::tie(lo[j], hi[j]) = spatial_window(box.P[j], box.Q[j], p);
        for (long k = lo[j]; k <= hi[j]; ++k) {
            const double hm = p.h * k;
            B[j].push_back(box_factor(p.M, (x[j] - hm) / hs, ts, (box.P[j] - hm) / hs, (box.Q[j] - hm) / hs) / sd);
        }
        m[j] = lo[j];
    }
    std::vector<double> node(n);
    cplx s = 0.0;
    for (;;) {
        cplx b = 1.0;
        for (size_t j = 0; j < n; ++j) {
            node[j] = p.h * m[j];
            b *= B[j][m[j] - lo[j]];
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
    return s;
}

cplx duhamel_field(const SeparatedFunction& f, const Box& box, const CubatureParams& p, const MoriRule& rule,
                   const std::vector<double>& x, double t, unsigned threads)
{
    p.validate();
    box.validate();
    rule.validate();
    if (!(t > 0))
        throw DomainError("duhamel_field: t <= 0");
    Plan proto(f, x, &box, p);
    const auto [Llo, Lhi] = time_window(t, p);
    for (const auto& s : proto.sums)
        if (!s.table->covers_l(Llo, Lhi))
            throw DomainError("factor table does not cover the time window");

    const double sd = std::sqrt(p.D), sd0 = std::sqrt(p.D0);
    const double hs = p.h * sd;
    const double lw = p.r0 * sd0;
    const size_t P = f.rank();

    // Per rank: separable factors contribute theta(ell), full factors a row per ell.
    std::vector<std::vector<int>> sep(P), full(P), stat(P);
    for (size_t r = 0; r < P; ++r)
        for (int u : proto.idx[r]) {
            const FactorTable* t = proto.sums[u].table;
            (t->full() ? full[r] : t->separable() ? sep[r] : stat[r]).push_back(u);
        }

    auto run = [&](Plan& plan, long q0, long q1) {
        std::vector<double> chis;
        cplx total = 0.0;
        for (long q = q0; q <= q1; ++q) {
            const double xi = rule.kappa * q;
            const double w = weight(rule.a, xi);
            if (w < weight_cutoff)
                continue;
            const double tp = t * phi_map(rule.a, xi);
            const double src = t * phi_map(rule.a, -xi);
            const double ts = 4.0 * tp / (p.h * p.h * p.D);

            const long la = std::max(Llo, static_cast<long>(std::ceil(src / p.tau - lw)));
            const long lb = std::min(Lhi, static_cast<long>(std::floor(src / p.tau + lw)));
            if (lb < la)
                continue;
            chis.resize(lb - la + 1);
            double chisum = 0.0;
            for (long l = la; l <= lb; ++l) {
                chis[l - la] = chi(p.M, (src - p.tau * l) / (p.tau * sd0));
                chisum += chis[l - la];
            }

            for (auto& dm : plan.dims)
                for (long m = dm.lo; m <= dm.hi; ++m) {
                    const double hm = p.h * m;
                    dm.B[m - dm.lo] = box_factor(p.M, (dm.x - hm) / hs, ts, (dm.P - hm) / hs, (dm.Q - hm) / hs) / sd;
                }
            plan.spatial_sums();
            for (auto& s : plan.sums) {
                if (!s.table->full())
                    continue;
                const auto& dm = plan.dims[s.d];
                const FactorTable& tb = *s.table;
                s.row.assign(lb - la + 1, 0.0);
                for (long l = la; l <= lb; ++l) {
                    cplx acc = 0.0;
                    for (long m = dm.lo; m <= dm.hi; ++m)
                        acc += tb.at(m, l) * dm.B[m - dm.lo];
                    s.row[l - la] = acc;
                }
            }

            cplx acc = 0.0;
            for (size_t r = 0; r < P; ++r) {
                cplx sp = f.weights[r];
                for (int u : stat[r])
                    sp *= plan.sums[u].value;
                for (int u : sep[r])
                    sp *= plan.sums[u].value;
                if (sep[r].empty() && full[r].empty()) {
                    acc += sp * chisum;
                    continue;
                }
                cplx tl = 0.0;
                for (long l = la; l <= lb; ++l) {
                    cplx v = chis[l - la];
                    for (int u : sep[r]) {
                        const FactorTable* tb = plan.sums[u].table;
                        v *= tb->theta[l - tb->l_lo];
                    }
                    for (int u : full[r])
                        v *= plan.sums[u].row[l - la];
                    tl += v;
                }
                acc += sp * tl;
            }
            total += w * acc;
        }
        return total;
    };

    cplx total = 0.0;
    if (threads <= 1) {
        total = run(proto, -rule.R, rule.R);
    } else {
        // Contiguous node blocks, partial sums added in block order.
        const long span = 2 * rule.R + 1;
        const long nb = std::min<long>(threads, span);
        std::vector<cplx> part(nb);
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errs(nb);
        for (long b = 0; b < nb; ++b)
            pool.emplace_back([&, b] {
                try {
                    Plan plan = proto;
                    const long q0 = -rule.R + span * b / nb;
                    const long q1 = -rule.R + span * (b + 1) / nb - 1;
                    part[b] = run(plan, q0, q1);
                } catch (...) {
                    errs[b] = std::current_exception();
                }
            });
        for (auto& th : pool)
            th.join();
        for (long b = 0; b < nb; ++b) {
            if (errs[b])
                std::rethrow_exception(errs[b]);
            total += part[b];
        }
    }
    return cplx(0.0, -1.0) * (0.5 * pi * rule.a * rule.kappa * t / sd0) * total;
}

cplx k2m_kernel(const CubatureParams& p, const MoriRule& rule, const std::vector<double>& x, double t,
                const std::vector<long>& m, long ell, const Box& box)
{
    p.validate();
    box.validate();
    if (x.size() != box.dim() || m.size() != box.dim())
        throw DomainError("k2m_kernel: dimension mismatch");
    const double sd = std::sqrt(p.D), sd0 = std::sqrt(p.D0);
    const double hs = p.h * sd;
    auto integrand = [&](double s) {
        cplx v = chi(p.M, (t - s - p.tau * ell) / (p.tau * sd0));
        if (v == 0.0)
            return v;
        const double ts = 4.0 * s / (p.h * p.h * p.D);
        for (size_t j = 0; j < x.size(); ++j) {
            const double hm = p.h * m[j];
            v *= box_factor(p.M, (x[j] - hm) / hs, ts, (box.P[j] - hm) / hs, (box.Q[j] - hm) / hs);
        }
        return v;
    };
    return integrate_0_to_t(integrand, t, rule);
}

cplx potential_phase(cplx u, double V_integral)
{
    return u * std::polar(1.0, -V_integral);
}

} // namespace schro
