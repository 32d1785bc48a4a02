#include "entrokit/sources.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entrokit {

VloModel::VloModel(VloConfig config) : config_(config), rng_(config.noise_seed) {
    if (config_.nominal_rate_hz <= 0.0) throw std::invalid_argument("nominal rate must be positive");
    if (config_.fast_clock_hz < 1000.0 * config_.nominal_rate_hz)
        throw std::invalid_argument("fast clock must be at least 1000x the nominal rate");
    if (config_.jitter_sigma_s < 0.0) throw std::invalid_argument("jitter sigma must be >= 0");
}

uint8_t VloModel::sample() {
    const double excursion = kWanderExcursionFraction * config_.nominal_rate_hz;
    const double drift =
        std::clamp(config_.wander_hz_per_s * elapsed_s_, -excursion, excursion);
    const double f = config_.nominal_rate_hz + drift;
    const double sigma =
        config_.jitter_sigma_s / (1.0 + std::fabs(config_.wander_hz_per_s) * kWanderJitterCoupling);
    const double period = std::max(1.0 / f + rng_.gaussian() * sigma, 1.0 / config_.fast_clock_hz);
    elapsed_s_ += period;
    const auto ticks = static_cast<uint64_t>(std::llround(period * config_.fast_clock_hz));
    return static_cast<uint8_t>(ticks & 0xFF);
}

void VloModel::fill(std::span<uint8_t> out) {
    for (auto& b : out) b = sample();
}

TempModel::TempModel(TempConfig config) : config_(config), rng_(config.noise_seed) {
    if (config_.sample_rate_hz <= 0.0) throw std::invalid_argument("sample rate must be positive");
    if (config_.noise_sigma_codes < 0.0) throw std::invalid_argument("noise sigma must be >= 0");
}

uint16_t TempModel::sample_code() {
    const double t = static_cast<double>(sample_index_++) / config_.sample_rate_hz;
    const double code =
        config_.baseline_code + config_.drift_codes_per_s * t + rng_.gaussian() * config_.noise_sigma_codes;
    const double clamped = std::clamp(std::round(code), 0.0, 4095.0);
    return static_cast<uint16_t>(clamped);
}

void TempModel::fill(std::span<uint8_t> out) {
    for (auto& b : out) b = sample();
}

SramModel::SramModel(SramConfig config) : rng_(config.noise_seed) {
    if (config.bias_mix < 0.0 || config.bias_mix > 1.0 || config.flip_prob < 0.0 ||
        config.flip_prob > 0.5 || config.persistence < 0.0 || config.persistence > 1.0)
        throw std::invalid_argument("SRAM bias parameters out of range");

    // Modal power-on direction per cell, spatially persistent; strongly
    // biased cells deviate with flip_prob, a small fraction sit near 0.5.
    SimRng bias_rng(config.bias_seed);
    cell_bias_.resize(kCellCount);
    int direction = bias_rng.bernoulli(0.5) ? 1 : 0;
    for (size_t i = 0; i < kCellCount; ++i) {
        if (!bias_rng.bernoulli(config.persistence)) direction ^= 1;
        cell_bias_[i] = direction ? 1.0 - config.flip_prob : config.flip_prob;
    }
    for (size_t i = 0; i < kCellCount; ++i)
        if (bias_rng.bernoulli(config.bias_mix)) cell_bias_[i] = 0.35 + 0.3 * bias_rng.uniform();
}

SramModel::SramModel(std::vector<double> cell_bias, uint64_t noise_seed)
    : cell_bias_(std::move(cell_bias)), rng_(noise_seed) {
    if (cell_bias_.size() != kCellCount)
        throw std::invalid_argument("cell bias table must cover all 81920 cells");
    for (double b : cell_bias_)
        if (b < 0.0 || b > 1.0) throw std::invalid_argument("cell bias must be in [0,1]");
}

SramImage SramModel::power_on() {
    SramImage image{};
    for (size_t byte = 0; byte < kSramImageBytes; ++byte) {
        uint8_t value = 0;
        for (int bit = 0; bit < 8; ++bit)
            value = static_cast<uint8_t>((value << 1) | (rng_.bernoulli(cell_bias_[byte * 8 + bit]) ? 1 : 0));
        image[byte] = value;
    }
    return image;
}

HarvestStats run_harvest(VloModel& vlo, TempModel& temp, Accumulator& accumulator,
                         Generator& generator, double duration_s) {
    if (duration_s <= 0.0) throw std::invalid_argument("harvest duration must be positive");

    constexpr uint8_t kVloTag = 0;
    constexpr uint8_t kTempTag = 1;

    HarvestStats stats;
    stats.duration_s = duration_s;

    const double temp_dt = 1.0 / temp.config().sample_rate_hz;
    double vlo_clock = 0.0;
    double temp_clock = temp_dt;
    uint8_t pending_vlo = vlo.sample();
    vlo_clock = vlo.elapsed_s();

    EntropyEvent event;
    event.payload.resize(1);

    const auto deliver = [&](uint8_t byte, uint8_t tag, double now) {
        event.payload[0] = byte;
        event.source_tag = tag;
        accumulator.add_event(event);
        if (tag == kVloTag)
            ++stats.vlo_events;
        else
            ++stats.temp_events;
        if (accumulator.reseed_ready(now)) {
            const uint64_t pool0 = accumulator.event_counts()[0];
            accumulator.reseed(generator, now);
            ++stats.reseeds;
            if (stats.reseeds == 1) {
                stats.first_reseed_time_s = now;
                stats.first_reseed_pool0_events = pool0;
            }
        }
    };

    while (vlo_clock <= duration_s || temp_clock <= duration_s) {
        if (vlo_clock <= temp_clock) {
            if (vlo_clock > duration_s) break;
            deliver(pending_vlo, kVloTag, vlo_clock);
            pending_vlo = vlo.sample();
            vlo_clock = vlo.elapsed_s();
        } else {
            if (temp_clock > duration_s) break;
            deliver(temp.sample(), kTempTag, temp_clock);
            temp_clock += temp_dt;
        }
    }

    const uint64_t total = stats.vlo_events + stats.temp_events;
    stats.measured_event_rate_hz = static_cast<double>(total) / duration_s;
    if (total > 0)
        stats.cadence =
            reseed_cadence(stats.measured_event_rate_hz, accumulator.config().reseed_threshold);
    return stats;
}

} // namespace entrokit
