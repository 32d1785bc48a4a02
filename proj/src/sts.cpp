#include "entrokit/sts.hpp"

#include "entrokit/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace entrokit::sts {

namespace {

void require_bits(std::span<const uint8_t> bits, size_t min_n, const char* test) {
    if (bits.size() < min_n)
        throw std::invalid_argument(std::string(test) + " requires at least " +
                                    std::to_string(min_n) + " bits");
    for (uint8_t b : bits)
        if (b > 1) throw std::invalid_argument("bit stream values must be 0 or 1");
}

} // namespace

Bits bytes_to_bits(std::span<const uint8_t> bytes) {
    Bits bits;
    bits.reserve(bytes.size() * 8);
    for (uint8_t byte : bytes)
        for (int i = 7; i >= 0; --i) bits.push_back((byte >> i) & 1);
    return bits;
}

double frequency_test(std::span<const uint8_t> bits) {
    require_bits(bits, 10, "frequency_test");
    const double n = static_cast<double>(bits.size());
    int64_t sum = 0;
    for (uint8_t b : bits) sum += b ? 1 : -1;
    const double s_obs = std::fabs(static_cast<double>(sum)) / std::sqrt(n);
    return std::erfc(s_obs / std::sqrt(2.0));
}

double block_frequency_test(std::span<const uint8_t> bits, size_t block_len) {
    require_bits(bits, 10, "block_frequency_test");
    if (block_len < 2 || bits.size() < block_len)
        throw std::invalid_argument("block_frequency_test needs block_len >= 2 and >= 1 block");
    const size_t blocks = bits.size() / block_len;
    double chi2 = 0.0;
    for (size_t b = 0; b < blocks; ++b) {
        size_t ones = 0;
        for (size_t i = 0; i < block_len; ++i) ones += bits[b * block_len + i];
        const double pi = static_cast<double>(ones) / static_cast<double>(block_len);
        chi2 += (pi - 0.5) * (pi - 0.5);
    }
    chi2 *= 4.0 * static_cast<double>(block_len);
    return igamc(static_cast<double>(blocks) / 2.0, chi2 / 2.0);
}

double cusum_test(std::span<const uint8_t> bits, CusumDirection direction) {
    require_bits(bits, 10, "cusum_test");
    const size_t n = bits.size();
    int64_t sum = 0;
    int64_t z = 0;
    if (direction == CusumDirection::forward) {
        for (size_t i = 0; i < n; ++i) {
            sum += bits[i] ? 1 : -1;
            z = std::max(z, sum < 0 ? -sum : sum);
        }
    } else {
        for (size_t i = n; i-- > 0;) {
            sum += bits[i] ? 1 : -1;
            z = std::max(z, sum < 0 ? -sum : sum);
        }
    }

    const double nd = static_cast<double>(n);
    const double zd = static_cast<double>(z);
    const double ratio = nd / zd;
    const double sqn = std::sqrt(nd);

    double sum1 = 0.0;
    {
        const auto lo = static_cast<int64_t>(std::ceil((-ratio + 1.0) / 4.0));
        const auto hi = static_cast<int64_t>(std::floor((ratio - 1.0) / 4.0));
        for (int64_t k = lo; k <= hi; ++k)
            sum1 += normal_cdf((4.0 * k + 1.0) * zd / sqn) - normal_cdf((4.0 * k - 1.0) * zd / sqn);
    }
    double sum2 = 0.0;
    {
        const auto lo = static_cast<int64_t>(std::ceil((-ratio - 3.0) / 4.0));
        const auto hi = static_cast<int64_t>(std::floor((ratio - 1.0) / 4.0));
        for (int64_t k = lo; k <= hi; ++k)
            sum2 += normal_cdf((4.0 * k + 3.0) * zd / sqn) - normal_cdf((4.0 * k + 1.0) * zd / sqn);
    }
    return std::clamp(1.0 - sum1 + sum2, 0.0, 1.0);
}

double runs_test(std::span<const uint8_t> bits) {
    require_bits(bits, 10, "runs_test");
    const size_t n = bits.size();
    const double nd = static_cast<double>(n);
    size_t ones = 0;
    for (uint8_t b : bits) ones += b;
    const double pi = static_cast<double>(ones) / nd;

    // Frequency precondition from the standard; by convention p = 0.
    if (std::fabs(pi - 0.5) >= 2.0 / std::sqrt(nd)) return 0.0;

    size_t v = 1;
    for (size_t i = 1; i < n; ++i) v += bits[i] != bits[i - 1];
    const double num = std::fabs(static_cast<double>(v) - 2.0 * nd * pi * (1.0 - pi));
    const double den = 2.0 * std::sqrt(2.0 * nd) * pi * (1.0 - pi);
    return std::erfc(num / den);
}

double longest_run_test(std::span<const uint8_t> bits) {
    require_bits(bits, 128, "longest_run_test");
    const size_t n = bits.size();

    size_t m_len;
    std::vector<int> classes;   // longest-run category boundaries, low..high
    std::vector<double> pi;
    if (n < 6272) {
        m_len = 8;
        classes = {1, 2, 3, 4};
        pi = {0.21484375, 0.3671875, 0.23046875, 0.1875};
    } else if (n < 750000) {
        m_len = 128;
        classes = {4, 5, 6, 7, 8, 9};
        pi = {0.1174035788, 0.242955959, 0.249363483, 0.17517706, 0.102701071, 0.112398847};
    } else {
        m_len = 10000;
        classes = {10, 11, 12, 13, 14, 15, 16};
        pi = {0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727};
    }
    const size_t k = classes.size() - 1;
    const size_t blocks = n / m_len;

    std::vector<uint64_t> nu(classes.size(), 0);
    for (size_t b = 0; b < blocks; ++b) {
        int longest = 0;
        int run = 0;
        for (size_t i = 0; i < m_len; ++i) {
            run = bits[b * m_len + i] ? run + 1 : 0;
            longest = std::max(longest, run);
        }
        size_t cls = 0;
        while (cls < k && longest > classes[cls]) ++cls;
        ++nu[cls];
    }

    double chi2 = 0.0;
    for (size_t i = 0; i < classes.size(); ++i) {
        const double expected = static_cast<double>(blocks) * pi[i];
        const double diff = static_cast<double>(nu[i]) - expected;
        chi2 += diff * diff / expected;
    }
    return igamc(static_cast<double>(k) / 2.0, chi2 / 2.0);
}

std::vector<TestResult> run_all_tests(std::span<const uint8_t> bits, size_t block_frequency_m) {
    return {
        {"Frequency", {frequency_test(bits)}},
        {"BlockFrequency", {block_frequency_test(bits, block_frequency_m)}},
        {"CumulativeSums",
         {cusum_test(bits, CusumDirection::forward), cusum_test(bits, CusumDirection::reverse)}},
        {"Runs", {runs_test(bits)}},
        {"LongestRun", {longest_run_test(bits)}},
    };
}

TestAggregate aggregate_histogram(const std::string& name, const std::array<uint64_t, 10>& histogram,
                                  uint64_t passes, uint64_t total, double alpha,
                                  double min_uniformity_p) {
    uint64_t hist_sum = 0;
    for (uint64_t c : histogram) hist_sum += c;
    if (hist_sum != total || total == 0)
        throw std::invalid_argument("histogram bins must sum to the p-value count");

    TestAggregate agg;
    agg.test_name = name;
    agg.histogram = histogram;
    agg.passes = passes;
    agg.total = total;

    const double expected = static_cast<double>(total) / 10.0;
    double chi2 = 0.0;
    for (uint64_t c : histogram) {
        const double diff = static_cast<double>(c) - expected;
        chi2 += diff * diff / expected;
    }
    agg.uniformity_p = igamc(4.5, chi2 / 2.0);
    agg.pass_ratio = static_cast<double>(passes) / static_cast<double>(total);

    const double p_hat = 1.0 - alpha;
    agg.threshold = p_hat - 3.0 * std::sqrt(p_hat * alpha / static_cast<double>(total));
    agg.pass = agg.pass_ratio >= agg.threshold && agg.uniformity_p >= min_uniformity_p;
    return agg;
}

BatchReport run_batch(const std::vector<Bits>& streams, const BatchConfig& config) {
    if (streams.empty()) throw std::invalid_argument("run_batch requires at least one stream");

    struct Tally {
        std::array<uint64_t, 10> histogram{};
        uint64_t passes = 0;
        uint64_t total = 0;
    };
    std::vector<std::string> order;
    std::map<std::string, Tally> tallies;

    for (const Bits& stream : streams) {
        if (stream.size() < 100)
            throw std::invalid_argument("batch streams must be at least 100 bits");
        for (const TestResult& result : run_all_tests(stream, config.block_frequency_m)) {
            auto [it, inserted] = tallies.try_emplace(result.test_name);
            if (inserted) order.push_back(result.test_name);
            for (double p : result.p_values) {
                if (!(p >= 0.0 && p <= 1.0))
                    throw std::runtime_error(result.test_name + " produced a bad p-value");
                it->second.histogram[std::min<size_t>(9, static_cast<size_t>(p * 10.0))] += 1;
                it->second.passes += p >= config.alpha;
                it->second.total += 1;
            }
        }
    }

    BatchReport report;
    report.stream_count = streams.size();
    report.all_pass = true;
    for (const auto& name : order) {
        const Tally& t = tallies.at(name);
        report.tests.push_back(aggregate_histogram(name, t.histogram, t.passes, t.total,
                                                   config.alpha, config.min_uniformity_p));
        report.all_pass = report.all_pass && report.tests.back().pass;
    }
    return report;
}

} // namespace entrokit::sts
