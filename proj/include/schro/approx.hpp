#pragma once

#include "schro/specfun.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace schro {

using Fn1 = std::function<cplx(double)>;
using FnN = std::function<cplx(const std::vector<double>&)>;
using cplxl = std::complex<long double>;
using Fn1L = std::function<cplxl(long double)>;

struct GeneratingSpec {
    int M = 1;
    double D = 4.0;
    double D0 = 4.0;

    void validate() const;
};

/// Lattice truncation radius in scaled units.
constexpr double lattice_radius = 12.0;

/// One-dimensional generating function chi_{2M}.
double chi(int M, double x);

/// Fourier transform of chi_{2M} with kernel exp(-2 pi i x xi).
double chi_fourier(int M, double xi);

/// 1-D lattice sum of |d^alpha F chi(sqrt(D) nu)| over nu != 0.
double saturation_bound(int M, double D, int alpha_order);

/// D^{-1/2} sum_m chi((x - hm) / (h sqrt D)).
cplx sigma_lattice(int M, double D, double x, double h);

/// Fourier-series side of the Poisson identity for sigma_lattice.
cplx sigma_fourier(int M, double D, double x, double h);

cplx quasi_interp(const FnN& g, const GeneratingSpec& spec, double h, const std::vector<double>& x);

struct HestenesScheme {
    std::vector<double> alphas;
    std::vector<double> coeffs;
    std::vector<long double> coeffs_ld;
    int order = 0;

    static HestenesScheme make(std::vector<double> alphas, int N);
    /// alpha_s = 1/s, s = 1..N+1
    static HestenesScheme harmonic(int N);
    /// alpha_s = 1/2^s, s = 1..N+1
    static HestenesScheme dyadic(int N);

    double max_alpha() const;
    double residual() const;
};

std::vector<double> hestenes_coeffs(const std::vector<double>& alphas, int N);
std::vector<long double> hestenes_coeffs_ld(const std::vector<double>& alphas, int N);

struct Extension1D {
    enum class Mode { hestenes, callback, zero };

    Mode mode = Mode::zero;
    double p = -1.0;
    double q = 1.0;
    HestenesScheme scheme;
    // Extend the d-th derivative of the function the extension was built for:
    // the reflected terms pick up (-alpha_s)^d.
    int derivative = 0;

    static Extension1D hestenes(HestenesScheme s, double p, double q, int derivative = 0);
    static Extension1D callback(double p, double q);
    static Extension1D zero(double p, double q);

    /// Interval on which extend_1d is defined.
    std::pair<double, double> domain() const;
};

cplx extend_1d(const Fn1& w, const Extension1D& ext, double x);

/// Same, in long double. The reflected sum amplifies errors in w by sum |c_s|,
/// which reaches 1e6 at N = 6.
cplxl extend_1d(const Fn1L& w, const Extension1D& ext, long double x);

} // namespace schro
