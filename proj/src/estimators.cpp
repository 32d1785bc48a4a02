#include "entrokit/estimators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace entrokit {

namespace {

constexpr double kZ = 2.576; // 99% confidence constant

void require_min(size_t n, size_t min_n, const char* what) {
    if (n < min_n)
        throw std::invalid_argument(std::string(what) + " requires at least " +
                                    std::to_string(min_n) + " samples");
}

void require_binary(std::span<const uint8_t> bits) {
    for (uint8_t b : bits)
        if (b > 1) throw std::invalid_argument("binary estimator input must be 0/1 valued");
}

double upper_bound(double p, double n) {
    return std::min(1.0, p + kZ * std::sqrt(p * (1.0 - p) / n));
}

// Mean time between collisions in a binary stream whose most likely symbol
// has probability p; the standard's bound reduces algebraically to
// 2 + 2q - 2q^2 with q = 1 - p.
double collision_mean(double p) {
    const double q = 1.0 - p;
    return 2.0 + 2.0 * q - 2.0 * q * q;
}

} // namespace

double mcv_estimate(std::span<const uint8_t> samples) {
    require_min(samples.size(), kEstimatorMinSamples, "mcv_estimate");
    std::array<uint64_t, 256> counts{};
    for (uint8_t s : samples) ++counts[s];
    const uint64_t mode = *std::max_element(counts.begin(), counts.end());

    const double n = static_cast<double>(samples.size());
    const double p_hat = static_cast<double>(mode) / n;
    return -std::log2(upper_bound(p_hat, n));
}

double collision_estimate(std::span<const uint8_t> bits) {
    bool fallback = false;
    return collision_estimate(bits, fallback);
}

double collision_estimate(std::span<const uint8_t> bits, bool& fallback) {
    require_min(bits.size(), kEstimatorMinSamples, "collision_estimate");
    require_binary(bits);
    fallback = false;

    // Walk the stream, recording the spacing to each next collision. For a
    // binary alphabet spacings are always 2 or 3.
    uint64_t twos = 0;
    uint64_t threes = 0;
    size_t i = 0;
    const size_t n = bits.size();
    while (i + 1 < n) {
        if (bits[i] == bits[i + 1]) {
            ++twos;
            i += 2;
        } else {
            if (i + 2 >= n) break;
            ++threes;
            i += 3;
        }
    }
    const uint64_t v = twos + threes;
    if (v == 0) {
        fallback = true;
        return 1.0;
    }

    const double vd = static_cast<double>(v);
    const double mean = (2.0 * twos + 3.0 * threes) / vd;
    const double var = (4.0 * twos + 9.0 * threes) / vd - mean * mean;
    const double mu_low = mean - kZ * std::sqrt(std::max(var, 0.0)) / std::sqrt(vd);

    if (mu_low >= collision_mean(0.5)) return 1.0; // no solution: full entropy
    if (mu_low <= collision_mean(1.0)) return 0.0;

    double lo = 0.5, hi = 1.0;
    for (int iter = 0; iter < 200 && hi - lo > 1e-9; ++iter) {
        const double p = 0.5 * (lo + hi);
        (collision_mean(p) > mu_low ? lo : hi) = p;
    }
    return -std::log2(0.5 * (lo + hi));
}

double markov_estimate(std::span<const uint8_t> bits) {
    require_min(bits.size(), kEstimatorMinSamples, "markov_estimate");
    require_binary(bits);
    const size_t n = bits.size();

    uint64_t ones = 0;
    std::array<uint64_t, 4> pair_counts{}; // index 2*prev + cur
    for (size_t i = 0; i < n; ++i) {
        ones += bits[i];
        if (i + 1 < n) ++pair_counts[2 * bits[i] + bits[i + 1]];
    }
    const uint64_t zeros = n - ones;

    const auto inflate = [](uint64_t num, uint64_t den) {
        if (den == 0) return 0.0;
        const double p = static_cast<double>(num) / static_cast<double>(den);
        return upper_bound(p, static_cast<double>(den));
    };
    const double init[2] = {inflate(zeros, n), inflate(ones, n)};
    const uint64_t row0 = pair_counts[0] + pair_counts[1];
    const uint64_t row1 = pair_counts[2] + pair_counts[3];
    const double trans[2][2] = {
        {inflate(pair_counts[0], row0), inflate(pair_counts[1], row0)},
        {inflate(pair_counts[2], row1), inflate(pair_counts[3], row1)},
    };

    // Most likely 128-step path by dynamic programming over log probabilities.
    double lp[2] = {std::log2(init[0]), std::log2(init[1])};
    double lt[2][2];
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) lt[a][b] = std::log2(trans[a][b]);
    for (int step = 0; step < 127; ++step) {
        const double next0 = std::max(lp[0] + lt[0][0], lp[1] + lt[1][0]);
        const double next1 = std::max(lp[0] + lt[0][1], lp[1] + lt[1][1]);
        lp[0] = next0;
        lp[1] = next1;
    }
    const double log_p_max = std::max(lp[0], lp[1]);
    if (!std::isfinite(log_p_max)) return 0.0; // every path impossible: degenerate stream
    return std::min(-log_p_max / 128.0, 1.0);
}

double compression_estimate(std::span<const uint8_t> bits) {
    require_binary(bits);
    if (bits.size() < kCompressionMinBits)
        throw std::invalid_argument("compression_estimate requires at least " +
                                    std::to_string(kCompressionMinBits) + " bits");

    constexpr int kBlockBits = 6;
    constexpr size_t kDictInit = 1000;
    constexpr double kSigmaFactor = 0.5907;

    const size_t blocks = bits.size() / kBlockBits;
    std::vector<uint8_t> vals(blocks);
    for (size_t i = 0; i < blocks; ++i) {
        uint8_t v = 0;
        for (int j = 0; j < kBlockBits; ++j) v = static_cast<uint8_t>((v << 1) | bits[i * 6 + j]);
        vals[i] = v;
    }

    // Dictionary distances (1-based positions); unseen values score their
    // own position.
    std::array<uint64_t, 64> last{};
    const size_t v_count = blocks - kDictInit;
    for (size_t i = 0; i < kDictInit; ++i) last[vals[i]] = i + 1;
    double sum = 0.0, sum_sq = 0.0;
    for (size_t i = kDictInit; i < blocks; ++i) {
        const uint64_t pos = i + 1;
        const uint64_t dist = last[vals[i]] ? pos - last[vals[i]] : pos;
        last[vals[i]] = pos;
        const double lg = std::log2(static_cast<double>(dist));
        sum += lg;
        sum_sq += lg * lg;
    }

    const double vd = static_cast<double>(v_count);
    const double mean = sum / vd;
    const double var = (sum_sq - vd * mean * mean) / (vd - 1.0);
    const double x_low = mean - kZ * kSigmaFactor * std::sqrt(std::max(var, 0.0)) / std::sqrt(vd);

    // log2 table shared across all bound evaluations of the binary search.
    std::vector<double> lg(blocks + 1);
    for (size_t i = 1; i <= blocks; ++i) lg[i] = std::log2(static_cast<double>(i));

    // Expected value of the statistic when one symbol has probability z and
    // the dictionary window spans [d+1, blocks].
    const auto g = [&](double z) {
        if (z <= 0.0) return 0.0;
        const double om = 1.0 - z;
        if (om <= 0.0) return 0.0;
        const double log_om = std::log(om);
        const size_t cutoff =
            log_om < 0.0 ? static_cast<size_t>(std::min<double>(-745.0 / log_om + 1.0, 1e18))
                         : blocks;

        // sum over u < t collapses to one pass weighted by how many t cover u
        double total = 0.0;
        double w = z * z; // z^2 * om^(u-1)
        const size_t u_max = std::min(blocks - 1, cutoff);
        for (size_t u = 1; u <= u_max; ++u) {
            total += lg[u] * w * static_cast<double>(blocks - std::max(u, kDictInit));
            w *= om;
        }
        double w2 = z * std::pow(om, static_cast<double>(kDictInit)); // z * om^(t-1), t = d+1
        const size_t t_max = std::min(blocks, cutoff);
        for (size_t t = kDictInit + 1; t <= t_max; ++t) {
            total += lg[t] * w2;
            w2 *= om;
        }
        return total / vd;
    };
    const auto g_total = [&](double p) { return g(p) + 63.0 * g((1.0 - p) / 63.0); };

    constexpr double kPUniform = 1.0 / 64.0;
    if (x_low >= g_total(kPUniform)) return 1.0; // no solution: full entropy

    double lo = kPUniform, hi = 1.0;
    for (int iter = 0; iter < 200 && hi - lo > 1e-9; ++iter) {
        const double p = 0.5 * (lo + hi);
        (g_total(p) > x_low ? lo : hi) = p;
    }
    return -std::log2(0.5 * (lo + hi)) / static_cast<double>(kBlockBits);
}

std::vector<uint8_t> binarize_msb_first(std::span<const uint8_t> samples) {
    std::vector<uint8_t> bits;
    bits.reserve(samples.size() * 8);
    for (uint8_t s : samples)
        for (int i = 7; i >= 0; --i) bits.push_back((s >> i) & 1);
    return bits;
}

EntropyReport full_report(std::span<const uint8_t> samples) {
    require_min(samples.size(), kEstimatorMinSamples, "full_report");

    const bool binary = std::all_of(samples.begin(), samples.end(), [](uint8_t s) { return s <= 1; });

    EntropyReport report;
    report.sample_count = samples.size();
    report.alphabet_size = binary ? 2 : 256;
    report.bits_per_sample = binary ? 1 : 8;

    std::vector<uint8_t> binarized;
    std::span<const uint8_t> bits = samples;
    if (!binary) {
        binarized = binarize_msb_first(samples);
        bits = binarized;
    }
    const double factor = static_cast<double>(report.bits_per_sample);

    report.mcv = mcv_estimate(samples);
    report.collision = collision_estimate(bits, report.collision_fallback) * factor;
    report.markov = markov_estimate(bits) * factor;
    report.compression = compression_estimate(bits) * factor;
    report.min_entropy =
        std::min({report.mcv, report.collision, report.markov, report.compression});
    return report;
}

} // namespace entrokit
