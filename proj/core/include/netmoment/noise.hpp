#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "netmoment/quad.hpp"

namespace netmoment {

enum class VarianceMode {
    weighted,  // quadrature-weighted population variance over the disk
    plain,     // unweighted population variance of the samples
};

struct NoiseSpec {
    double snr_db = std::numeric_limits<double>::infinity();
    std::uint64_t seed = 0;
    // Independent sub-stream, e.g. the radius index of a sweep cell.
    std::uint64_t stream = 0;
    VarianceMode variance = VarianceMode::weighted;
};

double field_variance(const FieldMap& map, VarianceMode mode);

// sqrt(10^(-snr/10) Var(B3)); 0 for infinite SNR.
double noise_sigma(const FieldMap& map, double snr_db, VarianceMode mode);

// Standard normal draw determined only by (seed, stream, index).
double standard_normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

// Adds white Gaussian noise, one draw per node keyed by node index.
// Infinite SNR returns the map unchanged. Throws if the map is already noisy.
FieldMap add_noise(const FieldMap& map, const NoiseSpec& spec);

struct DetrendPoint {
    double A = 0.0;
    double value = 0.0;
    bool corrected = false;  // false: not enough history, raw value passed through
};

// Backward local linear regression: for each point with window-1 smaller-A
// predecessors, fit v ~ b0 + b1 A over those window points and report b0.
std::vector<DetrendPoint> detrend_backward(const std::vector<std::pair<double, double>>& series,
                                           int window = 11);

}  // namespace netmoment
