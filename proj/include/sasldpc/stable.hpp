#pragma once

#include <cstdint>
#include <vector>

namespace sasldpc {

// Symmetric alpha-stable law, characteristic function exp(-gamma^alpha |l|^alpha).
// alpha = 2 is Gaussian with variance 2*gamma^2, alpha = 1 is Cauchy.
// gamma = 0 is reserved as the "punctured, no channel observation" sentinel.
struct SAlphaSParams {
    double alpha = 2.0;
    double gamma = 1.0;

    bool punctured() const { return gamma == 0.0; }
    void validate() const;  // throws std::invalid_argument on bad alpha/gamma
};

// Standardized (gamma = 1) SaS density, evaluable at any real x.
//
// Evaluation strategy: the tail series in 1/|x| when its truncation error is
// negligible, otherwise numeric inversion of the characteristic function with
// oscillation-aware panels. alpha = 2 has no power tail and is evaluated in
// closed form. Immutable after construction, safe to share across threads
// once fast_eval has been built (or never built).
class StableDensity {
public:
    explicit StableDensity(double alpha);

    double alpha() const { return alpha_; }

    double pdf(double x) const;
    double log_pdf(double x) const;

    // Builds an interpolation table over the quadrature region so that bulk
    // evaluations (LLR tables, CDF grids) are cheap. Idempotent; call before
    // sharing across threads.
    void build_fast_eval();
    bool has_fast_eval() const { return !spline_y_.empty(); }
    double fast_log_pdf(double x) const;

    // Direct characteristic-function inversion, exposed for accuracy tests.
    double quadrature_pdf(double x) const;
    // Tail series; returns false if the truncation error is above tol.
    bool series_log_pdf(double x, double& out, double rel_tol = 1e-13) const;

private:
    double alpha_;
    std::vector<double> series_log_coeff_;  // log |c_k|, signs in series_sign_
    std::vector<int> series_sign_;

    // cubic Hermite data for fast_log_pdf on [0, spline_xmax_]
    double spline_step_ = 0.0;
    double spline_xmax_ = 0.0;
    std::vector<double> spline_y_;
    std::vector<double> spline_d_;
};

// Density of SaS(alpha, gamma) at x. Direct evaluation, no caching.
double sas_pdf(double x, const SAlphaSParams& params);

// i.i.d. draws from SaS(alpha, gamma) via the exact Chambers-Mallows-Stuck
// transformation. Deterministic given seed.
std::vector<double> sas_sample(const SAlphaSParams& params, std::size_t count,
                               std::uint64_t seed);

// Single draw from the standard (gamma = 1) law using an external stream.
class Rng;
double sas_draw_std(double alpha, Rng& rng);

}  // namespace sasldpc
