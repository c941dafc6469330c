#pragma once

#include "schro/approx.hpp"
#include "schro/timequad.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace schro {

struct CubatureParams {
    int M = 1;
    double D = 4.0;
    double D0 = 4.0;
    double h = 1.0 / 40;
    double tau = 1.0 / 80;
    double r = 6.0;
    double r0 = 6.0;

    void validate() const;
};

/// Hyper-rectangle [P, Q].
struct Box {
    std::vector<double> P;
    std::vector<double> Q;

    static Box cube(size_t n, double lo, double hi);
    size_t dim() const { return P.size(); }
    void validate() const;
};

/// Samples of a univariate factor at h*m, m = m_lo .. m_lo + nm() - 1.
///
/// Three layouts: space only; separable, where the spatial samples are
/// multiplied by a time profile theta(tau*ell); and full space-time, where
/// values holds rows ell = l_lo .. l_lo + nl - 1 of nm samples each.
struct FactorTable {
    long m_lo = 0;
    long m_count = 0;
    std::vector<cplx> values;
    long l_lo = 0;
    std::vector<cplx> theta;
    long nl = 0;

    long nm() const { return m_count; }
    bool separable() const { return !theta.empty(); }
    bool full() const { return nl > 0; }
    bool covers_m(long lo, long hi) const { return lo >= m_lo && hi < m_lo + m_count; }
    bool covers_l(long lo, long hi) const;
    cplx at(long m, long ell = 0) const;
};

using FactorPtr = std::shared_ptr<const FactorTable>;

/// Rank-P sum of products: sum_p weights[p] prod_j factors[p][j].
/// Factor pointers may be shared between ranks and dimensions; shared
/// tables at equal coordinates are summed once.
struct SeparatedFunction {
    std::vector<cplx> weights;
    std::vector<std::vector<FactorPtr>> factors;

    size_t rank() const { return weights.size(); }
    size_t dim() const { return factors.empty() ? 0 : factors[0].size(); }
    void validate() const;
    static SeparatedFunction rank_one(size_t n, FactorPtr f, cplx weight = 1.0);
};

FactorPtr sample_factor(const Fn1& w, const Extension1D& ext, double h, long m_lo, long m_hi);

/// Samples formed in long double and rounded once; nodes are m * h in long double.
FactorPtr sample_factor(const Fn1L& w, const Extension1D& ext, double h, long m_lo, long m_hi);

/// Spatial samples w(hm) times theta(tau ell); the time profile is evaluated as given,
/// so pass an extended theta when ell < 0 is reached.
FactorPtr sample_separable(const Fn1& w, const Extension1D& ext, double h, long m_lo, long m_hi,
                           const Fn1& theta, double tau, long l_lo, long l_hi);

/// Full space-time samples f(hm, tau ell).
FactorPtr sample_space_time(const std::function<cplx(double, double)>& f, double h, long m_lo, long m_hi,
                            double tau, long l_lo, long l_hi);

/// Lattice indices m with hm in (P - r h sqrt D, Q + r h sqrt D).
std::pair<long, long> spatial_window(double P, double Q, const CubatureParams& p);

/// Time indices ell with tau ell in (-r0 tau sqrt D0, t + r0 tau sqrt D0).
std::pair<long, long> time_window(double t, const CubatureParams& p);

cplx free_field(const SeparatedFunction& g, const CubatureParams& p, const std::vector<double>& x, double t);

cplx box_field(const SeparatedFunction& g, const Box& box, const CubatureParams& p, const std::vector<double>& x,
               double t);

/// Non-separated input on the box window, n <= 3.
cplx box_field_dense(const FnN& g, const Box& box, const CubatureParams& p, const std::vector<double>& x, double t);

/// threads > 1 splits the Mori nodes into contiguous blocks; the result depends on the block count.
cplx duhamel_field(const SeparatedFunction& f, const Box& box, const CubatureParams& p, const MoriRule& rule,
                   const std::vector<double>& x, double t, unsigned threads = 1);

/// Mori value of int_0^t chi((t - s - tau ell)/(tau sqrt D0)) prod_j box_factor(...) ds
/// for the lattice node h*m.
cplx k2m_kernel(const CubatureParams& p, const MoriRule& rule, const std::vector<double>& x, double t,
                const std::vector<long>& m, long ell, const Box& box);

/// u exp(-i V_integral)
cplx potential_phase(cplx u, double V_integral);

} // namespace schro
