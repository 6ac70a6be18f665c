#include "sasldpc/stable.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sasldpc/rng.hpp"

namespace sasldpc {

namespace {

constexpr double kPi = 3.141592653589793238463;

// exp(-u^alpha) falls below 1e-18 at this u; integration beyond is noise.
double envelope_cutoff(double alpha) { return std::pow(41.5, 1.0 / alpha); }

bool accept_series_sum(double sum, double& out) {
    if (!(sum > 0.0)) return false;
    out = std::log(sum);
    return true;
}

}  // namespace

void SAlphaSParams::validate() const {
    if (!(alpha > 0.0) || alpha > 2.0)
        throw std::invalid_argument("SAlphaSParams: alpha must be in (0, 2]");
    if (!(gamma >= 0.0))
        throw std::invalid_argument("SAlphaSParams: gamma must be >= 0");
}

StableDensity::StableDensity(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0) || alpha > 2.0)
        throw std::invalid_argument("StableDensity: alpha must be in (0, 2]");
    if (alpha_ == 2.0) return;  // closed form, no series needed
    // Tail series f(x) = (1/pi) sum_k (-1)^{k+1} Gamma(a k + 1)/k! sin(k pi a/2) x^{-a k - 1}
    series_log_coeff_.reserve(48);
    series_sign_.reserve(48);
    for (int k = 1; k <= 48; ++k) {
        double s = std::sin(0.5 * kPi * alpha_ * k);
        int sign = (k % 2 == 0) ? -1 : 1;
        if (s < 0) {
            sign = -sign;
            s = -s;
        }
        if (s == 0.0) {
            series_log_coeff_.push_back(-1e300);
            series_sign_.push_back(0);
            continue;
        }
        double lc = std::lgamma(alpha_ * k + 1.0) - std::lgamma(k + 1.0) +
                    std::log(s) - std::log(kPi);
        series_log_coeff_.push_back(lc);
        series_sign_.push_back(sign);
    }
}

bool StableDensity::series_log_pdf(double x, double& out, double rel_tol) const {
    x = std::abs(x);
    if (alpha_ == 2.0 || x <= 1.0) return false;
    const double lx = std::log(x);
    // terms t_k = sign_k * exp(log_c_k - (alpha k + 1) log x), summed until they
    // start growing again (asymptotic series); accept if the first omitted term
    // is negligible against the partial sum.
    double sum = 0.0;
    double prev_mag = 1e308;
    for (std::size_t i = 0; i < series_log_coeff_.size(); ++i) {
        const double k = static_cast<double>(i + 1);
        if (series_sign_[i] == 0) continue;
        double lt = series_log_coeff_[i] - (alpha_ * k + 1.0) * lx;
        double mag = std::exp(lt);
        if (mag > prev_mag) {
            // divergence point of the asymptotic series
            return prev_mag <= rel_tol * std::abs(sum) && accept_series_sum(sum, out);
        }
        sum += series_sign_[i] * mag;
        prev_mag = mag;
        if (mag <= rel_tol * std::abs(sum) && i >= 2)
            return accept_series_sum(sum, out);
    }
    return prev_mag <= rel_tol * std::abs(sum) && accept_series_sum(sum, out);
}

double StableDensity::quadrature_pdf(double x) const {
    x = std::abs(x);
    const double cutoff = envelope_cutoff(alpha_);
    const auto integrand = [&](double u) {
        return std::exp(-std::pow(u, alpha_)) * std::cos(u * x);
    };
    // First panel [0, u0]: u^alpha has unbounded higher derivatives at 0 for
    // non-integer alpha, so use tanh-sinh there.
    const double u0 = std::min(1.0, cutoff);
    boost::math::quadrature::tanh_sinh<double> ts;
    double total = ts.integrate(integrand, 0.0, u0, 1e-13);
    if (cutoff > u0) {
        // Panels between zeros of cos(u x) (or unit panels when x is small),
        // each smooth enough for fixed-order Gauss-Legendre.
        const double period = (x > 1.0) ? kPi / x : 1.0;
        double c = 0.0;  // Kahan compensation
        double a = u0;
        while (a < cutoff) {
            double b = std::min(a + period, cutoff);
            double piece =
                boost::math::quadrature::gauss<double, 31>::integrate(integrand, a, b);
            double yk = piece - c;
            double t = total + yk;
            c = (t - total) - yk;
            total = t;
            a = b;
        }
    }
    return std::max(0.0, total / kPi);
}

double StableDensity::pdf(double x) const {
    return std::exp(log_pdf(x));
}

double StableDensity::log_pdf(double x) const {
    x = std::abs(x);
    if (alpha_ == 2.0)
        return -0.25 * x * x - 0.5723649429247000870717;  // ln(2 sqrt(pi))
    double out;
    if (x > 3.0 && series_log_pdf(x, out)) return out;
    double v = quadrature_pdf(x);
    if (v <= 0.0) return -1e300;
    return std::log(v);
}

void StableDensity::build_fast_eval() {
    if (has_fast_eval() || alpha_ == 2.0) return;
    // Cover the quadrature region plus margin; beyond this the series path is
    // both fast and accurate for alpha in [0.5, 2).
    spline_xmax_ = 14.0;
    spline_step_ = 0.004;
    const std::size_t n = static_cast<std::size_t>(spline_xmax_ / spline_step_) + 1;
    spline_y_.resize(n);
    spline_d_.resize(n);
    for (std::size_t i = 0; i < n; ++i) spline_y_[i] = log_pdf(i * spline_step_);
    // centered-difference derivatives for the Hermite segments
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0)
            spline_d_[i] = 0.0;  // even function
        else if (i + 1 == n)
            spline_d_[i] = (spline_y_[i] - spline_y_[i - 1]) / spline_step_;
        else
            spline_d_[i] = (spline_y_[i + 1] - spline_y_[i - 1]) / (2.0 * spline_step_);
    }
}

double StableDensity::fast_log_pdf(double x) const {
    x = std::abs(x);
    if (alpha_ == 2.0) return log_pdf(x);
    if (spline_y_.empty() || x >= spline_xmax_) {
        double out;
        if (x > 3.0 && series_log_pdf(x, out)) return out;
        return log_pdf(x);
    }
    const double u = x / spline_step_;
    std::size_t i = std::min(static_cast<std::size_t>(u), spline_y_.size() - 2);
    const double t = u - static_cast<double>(i);
    const double h = spline_step_;
    const double y0 = spline_y_[i], y1 = spline_y_[i + 1];
    const double d0 = spline_d_[i] * h, d1 = spline_d_[i + 1] * h;
    const double t2 = t * t, t3 = t2 * t;
    return y0 * (2 * t3 - 3 * t2 + 1) + d0 * (t3 - 2 * t2 + t) +
           y1 * (-2 * t3 + 3 * t2) + d1 * (t3 - t2);
}

double sas_pdf(double x, const SAlphaSParams& params) {
    params.validate();
    if (params.gamma == 0.0)
        throw std::invalid_argument("sas_pdf: density undefined for gamma = 0");
    StableDensity d(params.alpha);
    return d.pdf(x / params.gamma) / params.gamma;
}

double sas_draw_std(double alpha, Rng& rng) {
    // Chambers-Mallows-Stuck for the symmetric case:
    //   X = sin(a U) / cos(U)^{1/a} * (cos((1-a) U) / W)^{(1-a)/a}
    // with U uniform on (-pi/2, pi/2) and W standard exponential.
    const double u = kPi * (rng.uniform() - 0.5);
    const double w = rng.exponential();
    if (alpha == 1.0) return std::tan(u);
    const double a = alpha;
    const double x = std::sin(a * u) * std::pow(std::cos(u), -1.0 / a) *
                     std::pow(std::cos((1.0 - a) * u) / w, (1.0 - a) / a);
    return x;
}

std::vector<double> sas_sample(const SAlphaSParams& params, std::size_t count,
                               std::uint64_t seed) {
    params.validate();
    if (count < 1) throw std::invalid_argument("sas_sample: count must be >= 1");
    std::vector<double> out(count);
    Rng rng(seed);
    for (auto& v : out) v = params.gamma * sas_draw_std(params.alpha, rng);
    return out;
}

}  // namespace sasldpc
