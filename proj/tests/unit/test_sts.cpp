#include <doctest.h>

#include "entrokit/sts.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

using namespace entrokit;

namespace {

sts::Bits bits_from(const std::string& s) {
    sts::Bits bits;
    bits.reserve(s.size());
    for (char c : s) bits.push_back(c == '1');
    return bits;
}

sts::Bits pattern(size_t n, uint8_t first, uint8_t second) {
    sts::Bits bits(n);
    for (size_t i = 0; i < n; ++i) bits[i] = i % 2 ? second : first;
    return bits;
}

sts::Bits uniform_bits(size_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    sts::Bits bits(n);
    for (auto& b : bits) b = static_cast<uint8_t>(rng() & 1);
    return bits;
}

} // namespace

TEST_CASE("worked fixture p-values") {
    CHECK(sts::frequency_test(bits_from("1011010101")) ==
          doctest::Approx(0.527089256866).epsilon(1e-9));
    CHECK(sts::block_frequency_test(bits_from("0110011010"), 3) ==
          doctest::Approx(0.801251956901).epsilon(1e-9));
    CHECK(sts::cusum_test(bits_from("1011010111"), sts::CusumDirection::forward) ==
          doctest::Approx(0.411658619154).epsilon(1e-9));
    CHECK(sts::runs_test(bits_from("1001101011")) ==
          doctest::Approx(0.147232255364).epsilon(1e-9));

    const std::string fixture128 =
        "11001100000101010110110001001100111000000000001001"
        "00110101010001000100111101011010000000110101111100"
        "1100111001101101100010110010";
    CHECK(sts::longest_run_test(bits_from(fixture128)) ==
          doctest::Approx(0.18060931824).epsilon(1e-8));
}

TEST_CASE("degenerate streams") {
    const sts::Bits zeros(1000, 0);
    const sts::Bits ones(1000, 1);
    const sts::Bits alternating = pattern(1000, 0, 1);

    CHECK(sts::frequency_test(zeros) < 1e-100);
    CHECK(sts::frequency_test(alternating) == doctest::Approx(1.0));
    CHECK(sts::block_frequency_test(ones, 20) < 1e-100);
    CHECK(sts::block_frequency_test(alternating, 20) == doctest::Approx(1.0));
    CHECK(sts::runs_test(ones) == 0.0);               // frequency precondition
    CHECK(sts::runs_test(alternating) < 1e-12);       // far too many runs
    CHECK(sts::cusum_test(alternating, sts::CusumDirection::forward) > 0.999);
    CHECK(sts::cusum_test(ones, sts::CusumDirection::forward) < 1e-100);

    sts::Bits all_ones_block(1024, 1);
    CHECK(sts::longest_run_test(all_ones_block) < 1e-10);
}

TEST_CASE("block frequency all-half blocks give p = 1") {
    sts::Bits bits;
    for (int b = 0; b < 50; ++b)
        for (int i = 0; i < 20; ++i) bits.push_back(i < 10);
    CHECK(sts::block_frequency_test(bits, 20) == doctest::Approx(1.0));
}

TEST_CASE("frequency p-value never rises with more imbalance") {
    double prev = 1.1;
    for (size_t ones = 500; ones <= 620; ones += 20) {
        sts::Bits bits(1000, 0);
        for (size_t i = 0; i < ones; ++i) bits[i] = 1;
        const double p = sts::frequency_test(bits);
        CHECK(p <= prev);
        prev = p;
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(sts::frequency_test(bits_from("10101")), std::invalid_argument);
    CHECK_THROWS_AS(sts::runs_test(bits_from("111")), std::invalid_argument);
    CHECK_THROWS_AS(sts::longest_run_test(bits_from("1111111100001111")), std::invalid_argument);
    const sts::Bits bad(200, 3);
    CHECK_THROWS_AS(sts::frequency_test(bad), std::invalid_argument);
}

TEST_CASE("run_all_tests yields six p-values across five tests") {
    const auto results = sts::run_all_tests(uniform_bits(20000, 5), 128);
    REQUIRE(results.size() == 5);
    size_t total = 0;
    for (const auto& r : results) {
        for (double p : r.p_values) {
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
        }
        total += r.p_values.size();
    }
    CHECK(total == 6);
    CHECK(results[2].test_name == "CumulativeSums");
    CHECK(results[2].p_values.size() == 2);
}

TEST_CASE("published batch aggregation fixture") {
    // Frequency row: histogram, chi-square uniformity p-value, pass ratio.
    const std::array<uint64_t, 10> freq_hist{288, 285, 262, 265, 296, 268, 239, 327, 266, 304};
    const auto agg = sts::aggregate_histogram("Frequency", freq_hist, 2771, 2800);
    CHECK(std::fabs(agg.uniformity_p - 0.015831824990882) < 1e-9);
    CHECK(agg.passes == 2771);
    CHECK(agg.total == 2800);
    CHECK(agg.pass_ratio == doctest::Approx(2771.0 / 2800.0));
    CHECK(agg.threshold == doctest::Approx(0.984358951465).epsilon(1e-9));
    CHECK(agg.pass);

    struct Row {
        std::array<uint64_t, 10> hist;
        uint64_t passes;
        double printed_p;
    };
    const Row rows[] = {
        {{276, 287, 264, 312, 261, 289, 275, 277, 285, 274}, 2774, 0.666097},
        {{292, 242, 293, 301, 274, 255, 267, 253, 320, 303}, 2769, 0.012556},
        {{260, 285, 323, 273, 276, 267, 261, 287, 269, 299}, 2774, 0.205375},
        {{275, 313, 286, 296, 281, 274, 248, 266, 269, 292}, 2773, 0.314759},
    };
    for (const auto& row : rows) {
        const auto a = sts::aggregate_histogram("row", row.hist, row.passes, 2800);
        CHECK(std::fabs(a.uniformity_p - row.printed_p) < 1e-6);
        CHECK(a.pass);
    }
}

TEST_CASE("aggregate_histogram validates totals") {
    std::array<uint64_t, 10> hist{};
    hist[0] = 5;
    CHECK_THROWS_AS(sts::aggregate_histogram("x", hist, 5, 6), std::invalid_argument);
    CHECK_THROWS_AS(sts::aggregate_histogram("x", std::array<uint64_t, 10>{}, 0, 0),
                    std::invalid_argument);
}

TEST_CASE("batch over uniform oracle streams passes") {
    std::vector<sts::Bits> streams;
    for (int i = 0; i < 60; ++i) streams.push_back(uniform_bits(20000, 1000 + i));
    const auto report = sts::run_batch(streams);
    CHECK(report.stream_count == 60);
    CHECK(report.all_pass);
    for (const auto& t : report.tests) {
        CHECK(t.pass_ratio >= t.threshold);
        uint64_t sum = 0;
        for (uint64_t c : t.histogram) sum += c;
        CHECK(sum == t.total);
    }
}

TEST_CASE("batch of constant streams fails") {
    std::vector<sts::Bits> streams(20, sts::Bits(2000, 0));
    const auto report = sts::run_batch(streams);
    CHECK_FALSE(report.all_pass);
    for (const auto& t : report.tests)
        if (t.test_name == "Frequency") {
            CHECK(t.pass_ratio == 0.0);
            CHECK(t.histogram[0] == t.total); // every p-value in the lowest decile
        }
}

TEST_CASE("p-values of exactly 1 land in the top decile") {
    std::vector<sts::Bits> streams{pattern(2000, 0, 1)};
    const auto report = sts::run_batch(streams);
    for (const auto& t : report.tests)
        if (t.test_name == "Frequency") CHECK(t.histogram[9] == 1);
}

TEST_CASE("batch usage errors") {
    CHECK_THROWS_AS(sts::run_batch({}), std::invalid_argument);
    std::vector<sts::Bits> tiny{sts::Bits(50, 0)};
    CHECK_THROWS_AS(sts::run_batch(tiny), std::invalid_argument);
}

TEST_CASE("identical stream sets give identical reports") {
    std::vector<sts::Bits> streams;
    for (int i = 0; i < 10; ++i) streams.push_back(uniform_bits(4000, 77 + i));
    const auto a = sts::run_batch(streams);
    const auto b = sts::run_batch(streams);
    REQUIRE(a.tests.size() == b.tests.size());
    for (size_t i = 0; i < a.tests.size(); ++i) {
        CHECK(a.tests[i].uniformity_p == b.tests[i].uniformity_p);
        CHECK(a.tests[i].histogram == b.tests[i].histogram);
    }
}
