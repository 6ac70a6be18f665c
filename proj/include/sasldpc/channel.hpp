#pragma once

#include <cmath>
#include <memory>
#include <vector>

#include "sasldpc/stable.hpp"

namespace sasldpc {

// The paper's stated value of Euler's exponential constant C_g.
inline constexpr double kEulerCg = 1.78;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

// Channel operating point. G-SNR and Eb/N0 are tied by G-SNR = 2 R Eb/N0;
// either side can be filled from the other.
struct ChannelConfig {
    double rate = 0.5;           // code rate, in (0, 1)
    double ebn0_db = 0.0;        // energy per bit over N0, dB
    double gsnr = 0.0;           // geometric SNR, linear
    double euler_const = kEulerCg;
};

enum class ConvertDirection { Ebn0ToGsnr, GsnrToEbn0 };

ChannelConfig gsnr_ebn0_convert(ChannelConfig config, ConvertDirection direction);

// G-SNR of SaS(alpha, gamma): 1 / (2 C_g^{2/alpha - 1} gamma^2).
double gsnr_from_gamma(double gamma, double alpha);
double gamma_from_gsnr(double gsnr, double alpha);

// Dispersion that realizes a given Eb/N0 at a given code rate,
// gamma = sqrt(1 / (4 R C_g^{2/alpha-1} Eb/N0_linear)).
double gamma_from_ebn0(double ebn0_db, double rate, double alpha);

// Exact channel LLR log f(y-1)/f(y+1) for BPSK +-1 over SaS noise.
// gamma = 0 (punctured) yields 0. Evaluated in the log domain; odd in y.
double channel_llr(double y, const SAlphaSParams& params);

// Precomputed channel LLR on a uniform grid with linear interpolation and a
// power-law tail extension, for use inside Monte-Carlo loops. Immutable after
// construction and shareable across threads.
class LlrTable {
public:
    explicit LlrTable(const SAlphaSParams& params, double y_max = 40.0,
                      double step = 1e-3);
    LlrTable(const SAlphaSParams& params, std::shared_ptr<const StableDensity> density,
             double y_max = 40.0, double step = 1e-3);

    double operator()(double y) const;
    const SAlphaSParams& params() const { return params_; }
    double y_max() const { return y_max_; }
    double step() const { return step_; }
    const std::vector<double>& values() const { return values_; }

private:
    SAlphaSParams params_;
    double y_max_;
    double step_;
    std::vector<double> values_;  // LLR at y = i*step, i = 0..N; negative y by oddness
    bool gaussian_ = false;
    bool zero_ = false;
};

}  // namespace sasldpc
