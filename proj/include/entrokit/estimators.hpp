// Min-entropy estimators: most common value, collision, Markov, and
// compression, plus the min-of-estimators report. The most-common-value
// estimate runs on the raw sample alphabet; the other three are binary
// estimators, so non-binary streams are binarized most-significant-bit
// first and their per-bit results scale by 8 to per-sample units.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace entrokit {

struct EntropyReport {
    double min_entropy = 0.0; // bits per sample, minimum of the estimates below
    double mcv = 0.0;
    double collision = 0.0;
    double markov = 0.0;
    double compression = 0.0;
    size_t sample_count = 0;
    unsigned alphabet_size = 0;   // 2 for binary input, 256 otherwise
    unsigned bits_per_sample = 0; // conversion factor applied to binary estimators
    bool collision_fallback = false; // no collisions observed; full entropy reported
};

inline constexpr size_t kEstimatorMinSamples = 1000;
inline constexpr size_t kCompressionMinBits = 12000;

// Most common value estimate on the raw alphabet; bits per sample.
double mcv_estimate(std::span<const uint8_t> samples);

// Binary estimators; inputs are bit streams (values 0/1), results are bits
// per bit.
double collision_estimate(std::span<const uint8_t> bits);
double collision_estimate(std::span<const uint8_t> bits, bool& fallback);
double markov_estimate(std::span<const uint8_t> bits);
double compression_estimate(std::span<const uint8_t> bits);

std::vector<uint8_t> binarize_msb_first(std::span<const uint8_t> samples);

EntropyReport full_report(std::span<const uint8_t> samples);

} // namespace entrokit
