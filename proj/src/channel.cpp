#include "sasldpc/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace sasldpc {

ChannelConfig gsnr_ebn0_convert(ChannelConfig config, ConvertDirection direction) {
    if (!(config.rate > 0.0) || config.rate >= 1.0)
        throw std::invalid_argument("gsnr_ebn0_convert: rate must be in (0, 1)");
    if (direction == ConvertDirection::Ebn0ToGsnr) {
        config.gsnr = 2.0 * config.rate * db_to_linear(config.ebn0_db);
    } else {
        if (!(config.gsnr > 0.0))
            throw std::invalid_argument("gsnr_ebn0_convert: gsnr must be > 0");
        config.ebn0_db = linear_to_db(config.gsnr / (2.0 * config.rate));
    }
    return config;
}

double gsnr_from_gamma(double gamma, double alpha) {
    if (!(gamma > 0.0)) throw std::invalid_argument("gsnr_from_gamma: gamma must be > 0");
    return 1.0 / (2.0 * std::pow(kEulerCg, 2.0 / alpha - 1.0) * gamma * gamma);
}

double gamma_from_gsnr(double gsnr, double alpha) {
    if (!(gsnr > 0.0)) throw std::invalid_argument("gamma_from_gsnr: gsnr must be > 0");
    return std::sqrt(1.0 / (2.0 * std::pow(kEulerCg, 2.0 / alpha - 1.0) * gsnr));
}

double gamma_from_ebn0(double ebn0_db, double rate, double alpha) {
    if (!(rate > 0.0) || rate >= 1.0)
        throw std::invalid_argument("gamma_from_ebn0: rate must be in (0, 1)");
    if (!(alpha > 0.0) || alpha > 2.0)
        throw std::invalid_argument("gamma_from_ebn0: alpha must be in (0, 2]");
    const double ebn0 = db_to_linear(ebn0_db);
    if (!(ebn0 > 0.0))
        throw std::invalid_argument("gamma_from_ebn0: Eb/N0 must be positive");
    return std::sqrt(1.0 / (4.0 * rate * std::pow(kEulerCg, 2.0 / alpha - 1.0) * ebn0));
}

double channel_llr(double y, const SAlphaSParams& params) {
    params.validate();
    if (params.punctured()) return 0.0;
    if (params.alpha == 2.0) {
        // Gaussian noise variance 2 gamma^2: LLR = y / gamma^2 exactly.
        return y / (params.gamma * params.gamma);
    }
    StableDensity d(params.alpha);
    const double g = params.gamma;
    // log f(|y|-1) - log f(|y|+1), mirrored for negative y so oddness is exact
    const double s = (y < 0.0) ? -1.0 : 1.0;
    const double ay = std::abs(y);
    if (ay == 0.0) return 0.0;
    return s * (d.log_pdf((ay - 1.0) / g) - d.log_pdf((ay + 1.0) / g));
}

LlrTable::LlrTable(const SAlphaSParams& params, double y_max, double step)
    : LlrTable(params, nullptr, y_max, step) {}

LlrTable::LlrTable(const SAlphaSParams& params,
                   std::shared_ptr<const StableDensity> density, double y_max,
                   double step)
    : params_(params), y_max_(y_max), step_(step) {
    params_.validate();
    if (params_.punctured()) {
        zero_ = true;
        return;
    }
    if (params_.alpha == 2.0) {
        gaussian_ = true;
        return;
    }
    std::shared_ptr<const StableDensity> d = density;
    if (!d || d->alpha() != params_.alpha) {
        auto fresh = std::make_shared<StableDensity>(params_.alpha);
        fresh->build_fast_eval();
        d = fresh;
    }
    const double g = params_.gamma;
    const std::size_t n = static_cast<std::size_t>(std::llround(y_max_ / step_));
    values_.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const double y = static_cast<double>(i) * step_;
        values_[i] = d->fast_log_pdf((y - 1.0) / g) - d->fast_log_pdf((y + 1.0) / g);
    }
}

double LlrTable::operator()(double y) const {
    if (zero_) return 0.0;
    if (gaussian_) return y / (params_.gamma * params_.gamma);
    const double s = (y < 0.0) ? -1.0 : 1.0;
    const double ay = std::abs(y);
    if (ay >= y_max_) {
        // power-law tail f ~ |x|^{-alpha-1}: LLR -> (alpha+1) log((|y|+1)/(|y|-1))
        return s * (params_.alpha + 1.0) * std::log((ay + 1.0) / (ay - 1.0));
    }
    const double u = ay / step_;
    std::size_t i = static_cast<std::size_t>(u);
    if (i + 1 >= values_.size()) i = values_.size() - 2;
    const double t = u - static_cast<double>(i);
    return s * (values_[i] * (1.0 - t) + values_[i + 1] * t);
}

}  // namespace sasldpc
