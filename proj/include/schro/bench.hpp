#pragma once

#include "schro/propagate.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schro {

/// Closed-form solution for the initial data prod_j exp((x_j + a)^2) on [-1, 1]^n.
cplx exact_gaussian_box(double a, const std::vector<double>& x, double t);

/// i v'(t) prod w(x_j) + v(t) sum_j w''(x_j) prod_{k != j} w(x_k)
cplx manufactured_rhs(const Fn1& w, const Fn1& w1, const Fn1& w2, const Fn1& v, const Fn1& v1,
                      const std::vector<double>& x, double t);

/// (4 pi i t)^{-1/2} int_p^q exp(i (x - y)^2 / 4t) g(y) dy by adaptive Gauss-Legendre panels.
cplx direct_oracle_free(const Fn1& g, double p, double q, double x, double t, double rtol = 1e-9);

/// Adaptive panel quadrature of a smooth complex integrand on [a, b].
/// Throws ToleranceNotReached when bisection depth runs out.
cplx adaptive_integral(const Fn1& f, double a, double b, double rtol, double atol = 0.0);

struct RunConfig {
    std::string problem = "table3";
    int n = 1;
    std::vector<int> M{1, 2, 3};
    std::vector<double> h_levels;
    std::vector<double> tau_levels;
    std::vector<double> point;
    // field-slice only: one lo:hi:count triple per axis
    struct Axis {
        double lo, hi;
        int count;
    };
    std::vector<Axis> grid;
    std::vector<double> t{1.0};
    std::string extension_mode;
    std::string extension_alphas;
    MoriRule quad;
    double D = 4.0;
    double D0 = 4.0;
    double r = 6.0;
    double r0 = 6.0;
    std::string out;

    /// Resolved key=value pairs, in the canonical key order.
    std::vector<std::pair<std::string, std::string>> provenance() const;
    /// point padded with its last coordinate up to n
    std::vector<double> eval_point() const;
    HestenesScheme scheme(int N) const;
    Extension1D::Mode mode() const;
};

/// Raw key=value settings before problem defaults are applied.
using Settings = std::map<std::string, std::string>;

/// Reads flat key=value lines; '#' starts a comment. Throws ConfigError.
Settings read_settings(std::istream& in);
void apply_setting(Settings& s, const std::string& assignment);
/// Applies problem defaults, then the settings. Throws ConfigError.
RunConfig resolve_config(const Settings& s);

struct ConvergenceRow {
    int n;
    int M;
    double h;
    std::optional<double> tau;
    double abs_error;
    std::optional<double> rate;
};

std::vector<ConvergenceRow> run_convergence(const RunConfig& cfg, unsigned threads = 1);
void write_convergence_csv(std::ostream& os, const RunConfig& cfg, const std::vector<ConvergenceRow>& rows);

/// Traveling Gaussian exp(i c_j x) exp(-60 x^2), c = (30, -30), on the configured grid.
/// Columns x1,x2,t,re_u,im_u,abs_u.
void run_field_slice(const RunConfig& cfg, std::ostream& os);

/// Field-slice value at one point, exposed for tests.
cplx field_slice_value(const RunConfig& cfg, double x1, double x2, double t);

struct SuiteResult {
    std::string name;
    bool pass;
    double measured;
    double tolerance;
    std::string detail;
};

struct SelftestOptions {
    // Added to the first Hestenes coefficient inside the extension smoothness suite.
    double hestenes_perturbation = 0.0;
};

std::vector<SuiteResult> run_selftest(const SelftestOptions& opt = {});

// Problem pieces shared by the harness, the acceptance binary and the bindings.
namespace problems {

constexpr double gauss_shift = 0.32612;

/// Spatial extension of a problem's data on [-1, 1]. derivative selects
/// the reflected-term factor (-alpha_s)^d when extending w''.
Extension1D spatial_extension(Extension1D::Mode mode, const HestenesScheme& s, int derivative = 0);

/// Table 3 field at x for n = x.size(); the extension runs in long double.
cplx table3_field(int M, double h, Extension1D::Mode mode, const HestenesScheme& s, const std::vector<double>& x,
                  double t, double D = 4.0, double r = 6.0);

/// Duhamel field of the manufactured problem with v(t) = t.
/// which = 1: cos^2(5 pi x / 2); which = 2: exp(4ix)(x^2-1)^2.
cplx manufactured_field(int which, int M, double h, double tau, Extension1D::Mode mode, const HestenesScheme& s,
                        const MoriRule& rule, const std::vector<double>& x, double t, double D = 4.0,
                        double D0 = 4.0, double r = 6.0, double r0 = 6.0, unsigned threads = 1);

cplx manufactured_exact(int which, const std::vector<double>& x, double t);

/// exp(-|x|^2 / (1 + 4it)) / (1 + 4it)^{n/2}
cplx free_gaussian_exact(const std::vector<double>& x, double t);

cplx free_gaussian_field(int M, double h, const std::vector<double>& x, double t, double D = 4.0, double r = 6.0);

} // namespace problems

} // namespace schro
