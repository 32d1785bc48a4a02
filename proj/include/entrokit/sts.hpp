// The five statistical tests reported for the generator output (Frequency,
// BlockFrequency, CumulativeSums, Runs, LongestRunOfOnes) and the batch
// harness that aggregates per-stream p-values into decile histograms, a
// chi-square uniformity p-value, and pass ratios against the proportion
// threshold.
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace entrokit::sts {

using Bits = std::vector<uint8_t>; // one bit per element, values 0/1

// Unpack bytes most-significant-bit first.
Bits bytes_to_bits(std::span<const uint8_t> bytes);

double frequency_test(std::span<const uint8_t> bits);
double block_frequency_test(std::span<const uint8_t> bits, size_t block_len);

enum class CusumDirection { forward, reverse };
double cusum_test(std::span<const uint8_t> bits, CusumDirection direction);

double runs_test(std::span<const uint8_t> bits);
double longest_run_test(std::span<const uint8_t> bits);

struct TestResult {
    std::string test_name;
    std::vector<double> p_values; // two entries for CumulativeSums
};

// All five tests on one stream. CumulativeSums contributes forward and
// reverse p-values.
std::vector<TestResult> run_all_tests(std::span<const uint8_t> bits, size_t block_frequency_m);

struct TestAggregate {
    std::string test_name;
    std::array<uint64_t, 10> histogram{}; // C1..C10 deciles over [0,1]
    uint64_t passes = 0;
    uint64_t total = 0;
    double uniformity_p = 0.0;
    double pass_ratio = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct BatchConfig {
    size_t block_frequency_m = 128;
    double alpha = 0.01;
    double min_uniformity_p = 1e-4;
};

struct BatchReport {
    std::vector<TestAggregate> tests;
    size_t stream_count = 0;
    bool all_pass = false;
};

// Aggregation math on its own: given a decile histogram and pass counts,
// compute the uniformity p-value, pass ratio, and proportion threshold
// p_hat - 3*sqrt(p_hat*(1-p_hat)/m) with p_hat = 1 - alpha.
TestAggregate aggregate_histogram(const std::string& name, const std::array<uint64_t, 10>& histogram,
                                  uint64_t passes, uint64_t total, double alpha = 0.01,
                                  double min_uniformity_p = 1e-4);

BatchReport run_batch(const std::vector<Bits>& streams, const BatchConfig& config = {});

} // namespace entrokit::sts
