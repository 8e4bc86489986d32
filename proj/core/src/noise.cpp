#include "netmoment/noise.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace netmoment {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Minimal UniformRandomBitGenerator over a splitmix64 stream, so that
// std::normal_distribution can consume a per-node counter-derived state.
class CounterEngine {
public:
    using result_type = std::uint64_t;
    explicit CounterEngine(std::uint64_t state) : state_(state) {}
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()() {
        state_ += 0x9E3779B97F4A7C15ull;
        return splitmix64(state_);
    }

private:
    std::uint64_t state_;
};

}  // namespace

double field_variance(const FieldMap& map, VarianceMode mode) {
    const auto& nodes = map.grid.nodes;
    const std::size_t n = map.samples.size();
    if (n == 0) return 0.0;
    double wsum = 0.0, mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = mode == VarianceMode::weighted ? nodes[i].weight : 1.0;
        wsum += w;
        mean += w * map.samples[i];
    }
    mean /= wsum;
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = mode == VarianceMode::weighted ? nodes[i].weight : 1.0;
        const double d = map.samples[i] - mean;
        var += w * d * d;
    }
    return var / wsum;
}

double noise_sigma(const FieldMap& map, double snr_db, VarianceMode mode) {
    if (std::isinf(snr_db) && snr_db > 0) return 0.0;
    if (!std::isfinite(snr_db)) throw std::invalid_argument("SNR must be finite or +inf");
    return std::sqrt(std::pow(10.0, -snr_db / 10.0) * field_variance(map, mode));
}

double standard_normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    CounterEngine eng(splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index));
    std::normal_distribution<double> dist(0.0, 1.0);
    return dist(eng);
}

FieldMap add_noise(const FieldMap& map, const NoiseSpec& spec) {
    if (map.provenance.noisy) throw std::invalid_argument("field map is already noisy");
    if (std::isinf(spec.snr_db) && spec.snr_db > 0) return map;
    const double sigma = noise_sigma(map, spec.snr_db, spec.variance);
    FieldMap out = map;
    for (std::size_t i = 0; i < out.samples.size(); ++i) {
        out.samples[i] += sigma * standard_normal(spec.seed, spec.stream, i);
    }
    out.provenance = {true, spec.snr_db, spec.seed};
    return out;
}

std::vector<DetrendPoint> detrend_backward(const std::vector<std::pair<double, double>>& series,
                                           int window) {
    if (window < 3) throw std::invalid_argument("detrend window must be at least 3");
    for (std::size_t i = 1; i < series.size(); ++i) {
        if (!(series[i].first > series[i - 1].first)) {
            throw std::invalid_argument("detrend series must be strictly ascending in A");
        }
    }
    if (series.size() < static_cast<std::size_t>(window)) {
        throw std::invalid_argument("detrend window longer than the series");
    }
    std::vector<DetrendPoint> out;
    out.reserve(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (i + 1 < static_cast<std::size_t>(window)) {
            out.push_back({series[i].first, series[i].second, false});
            continue;
        }
        const std::size_t lo = i + 1 - window;
        double ma = 0.0, mv = 0.0;
        for (std::size_t j = lo; j <= i; ++j) {
            ma += series[j].first;
            mv += series[j].second;
        }
        ma /= window;
        mv /= window;
        double saa = 0.0, sav = 0.0;
        for (std::size_t j = lo; j <= i; ++j) {
            const double da = series[j].first - ma;
            saa += da * da;
            sav += da * (series[j].second - mv);
        }
        const double b1 = sav / saa;
        out.push_back({series[i].first, mv - b1 * ma, true});
    }
    return out;
}

}  // namespace netmoment
