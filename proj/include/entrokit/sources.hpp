// Parameterized simulators of the three entropy sources: low-power
// oscillator period jitter measured against a fast reference clock, a 12-bit
// ADC reading a temperature sensor, and SRAM power-on state. Every model is
// a deterministic function of its configuration and noise seed; the shipped
// defaults are calibrated so the estimator module reproduces the reference
// min-entropy figures.
#pragma once

#include "entrokit/accumulator.hpp"
#include "entrokit/generator.hpp"
#include "entrokit/seed_extract.hpp"
#include "entrokit/sim_rng.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace entrokit {

struct VloConfig {
    double nominal_rate_hz = 9500.0;
    double fast_clock_hz = 24.0e6;
    double jitter_sigma_s = 1.45 / 24.0e6; // calibrated; roughly 1.45 fast-clock ticks
    double wander_hz_per_s = 0.0;          // frequency ramp; 0 disables wander
    uint64_t noise_seed = 1;
};

// Wander model constants. The ramp saturates at a bounded excursion (the
// oscillator only moves a fraction of its nominal frequency across the full
// environmental range), and the deterministic drift displaces part of the
// random period variation, so the jitter seen by the capture shrinks as
// sigma / (1 + |wander| * coupling) while wander is active.
inline constexpr double kWanderJitterCoupling = 1.5;      // seconds per Hz
inline constexpr double kWanderExcursionFraction = 4e-5;  // of the nominal rate

class VloModel {
public:
    explicit VloModel(VloConfig config);

    // Low 8 bits of the period length in fast-clock ticks.
    uint8_t sample();
    void fill(std::span<uint8_t> out);

    // Simulated seconds consumed so far.
    double elapsed_s() const { return elapsed_s_; }
    const VloConfig& config() const { return config_; }

private:
    VloConfig config_;
    SimRng rng_;
    double elapsed_s_ = 0.0;
};

struct TempConfig {
    double baseline_code = 1650.0; // 12-bit ADC code
    double drift_codes_per_s = 0.0;
    double noise_sigma_codes = 7.0; // calibrated
    double sample_rate_hz = 9500.0;
    uint64_t noise_seed = 2;
};

class TempModel {
public:
    explicit TempModel(TempConfig config);

    // Full 12-bit conversion result (0..4095).
    uint16_t sample_code();
    // Low 8 bits of the conversion.
    uint8_t sample() { return static_cast<uint8_t>(sample_code() & 0xFF); }
    void fill(std::span<uint8_t> out);

    const TempConfig& config() const { return config_; }

private:
    TempConfig config_;
    SimRng rng_;
    uint64_t sample_index_ = 0;
};

struct SramConfig {
    double bias_mix = 0.03;   // fraction of cells with near-0.5 bias
    double flip_prob = 0.015; // probability a strongly biased cell deviates
    double persistence = 0.98; // spatial correlation of the modal direction
    uint64_t bias_seed = 3;
    uint64_t noise_seed = 4;
};

class SramModel {
public:
    static constexpr size_t kCellCount = kSramImageBytes * 8;

    explicit SramModel(SramConfig config);
    // Explicit per-cell one-probabilities, for experiments.
    SramModel(std::vector<double> cell_bias, uint64_t noise_seed);

    SramImage power_on();

    const std::vector<double>& cell_bias() const { return cell_bias_; }

private:
    std::vector<double> cell_bias_;
    SimRng rng_;
};

struct HarvestStats {
    double duration_s = 0.0;
    uint64_t vlo_events = 0;
    uint64_t temp_events = 0;
    uint64_t reseeds = 0;
    double first_reseed_time_s = -1.0;
    uint64_t first_reseed_pool0_events = 0;
    double measured_event_rate_hz = 0.0;
    ReseedCadence cadence{0.0, 0.0};
};

// Interleaves both runtime sources by simulated time, feeding each sample
// into the accumulator as a one-byte event and reseeding whenever the
// accumulator is ready.
HarvestStats run_harvest(VloModel& vlo, TempModel& temp, Accumulator& accumulator,
                         Generator& generator, double duration_s);

} // namespace entrokit
