#include <doctest.h>

#include "entrokit/estimators.hpp"
#include "entrokit/sources.hpp"

#include <cmath>
#include <numeric>
#include <vector>

using namespace entrokit;

TEST_CASE("vlo degenerates to a constant without noise") {
    VloConfig config;
    config.jitter_sigma_s = 0.0;
    config.wander_hz_per_s = 0.0;
    VloModel model(config);
    const auto expected = static_cast<uint8_t>(
        static_cast<uint64_t>(std::llround(config.fast_clock_hz / config.nominal_rate_hz)) & 0xFF);
    for (int i = 0; i < 1000; ++i) CHECK(model.sample() == expected);
}

TEST_CASE("vlo is deterministic per configuration") {
    VloModel a{VloConfig{}};
    VloModel b{VloConfig{}};
    std::vector<uint8_t> xs(10000), ys(10000);
    a.fill(xs);
    b.fill(ys);
    CHECK(xs == ys);

    VloConfig other;
    other.noise_seed = 999;
    VloModel c(other);
    std::vector<uint8_t> zs(10000);
    c.fill(zs);
    CHECK(xs != zs);
}

TEST_CASE("vlo long-run mean period stays within one percent") {
    VloModel model{VloConfig{}};
    const size_t n = 100000;
    double total_ticks = 0.0;
    for (size_t i = 0; i < n; ++i) {
        (void)model.sample();
    }
    total_ticks = model.elapsed_s() * model.config().fast_clock_hz;
    const double mean = total_ticks / static_cast<double>(n);
    const double nominal = model.config().fast_clock_hz / model.config().nominal_rate_hz;
    CHECK(std::fabs(mean - nominal) / nominal < 0.01);
}

TEST_CASE("vlo configuration validation") {
    VloConfig bad;
    bad.fast_clock_hz = 900.0 * bad.nominal_rate_hz;
    CHECK_THROWS_AS(VloModel{bad}, std::invalid_argument);

    VloConfig neg;
    neg.jitter_sigma_s = -1e-9;
    CHECK_THROWS_AS(VloModel{neg}, std::invalid_argument);

    VloConfig zero_rate;
    zero_rate.nominal_rate_hz = 0.0;
    CHECK_THROWS_AS(VloModel{zero_rate}, std::invalid_argument);
}

TEST_CASE("wander strictly reduces the markov estimate at equal jitter") {
    // run the pair at a wide-jitter inspection configuration where the
    // estimator response is steep
    VloConfig base;
    base.jitter_sigma_s = 8.0 / base.fast_clock_hz;
    base.noise_seed = 2024;

    VloConfig wander = base;
    wander.wander_hz_per_s = 2.0;

    std::vector<uint8_t> off(200000), on(200000);
    VloModel{base}.fill(off);
    VloModel{wander}.fill(on);

    const double m_off = markov_estimate(binarize_msb_first(off));
    const double m_on = markov_estimate(binarize_msb_first(on));
    CHECK(m_on < m_off);
}

TEST_CASE("temperature sensor behavior") {
    SUBCASE("no noise and no drift give a constant sample") {
        TempConfig config;
        config.noise_sigma_codes = 0.0;
        config.drift_codes_per_s = 0.0;
        TempModel model(config);
        const auto expected = static_cast<uint8_t>(
            static_cast<uint16_t>(std::llround(config.baseline_code)) & 0xFF);
        for (int i = 0; i < 1000; ++i) CHECK(model.sample() == expected);
    }

    SUBCASE("codes clamp to 12 bits under extreme noise") {
        TempConfig config;
        config.noise_sigma_codes = 1e5;
        TempModel model(config);
        for (int i = 0; i < 10000; ++i) {
            const uint16_t code = model.sample_code();
            CHECK(code <= 4095);
        }
    }

    SUBCASE("drift ramps the code until it clamps") {
        TempConfig config;
        config.baseline_code = 100.0;
        config.drift_codes_per_s = 1000.0;
        config.noise_sigma_codes = 0.0;
        TempModel model(config);
        uint16_t prev = 0;
        uint16_t last = 0;
        for (int i = 0; i < 50000; ++i) {
            last = model.sample_code();
            CHECK(last >= prev);
            prev = last;
        }
        CHECK(last == 4095);
    }

    SUBCASE("deterministic per configuration") {
        TempModel a{TempConfig{}};
        TempModel b{TempConfig{}};
        std::vector<uint8_t> xs(5000), ys(5000);
        a.fill(xs);
        b.fill(ys);
        CHECK(xs == ys);
    }

    SUBCASE("validation") {
        TempConfig bad;
        bad.sample_rate_hz = 0.0;
        CHECK_THROWS_AS(TempModel{bad}, std::invalid_argument);
    }
}

TEST_CASE("sram power-on state") {
    SUBCASE("degenerate biases") {
        SramModel zeros(std::vector<double>(SramModel::kCellCount, 0.0), 1);
        for (uint8_t b : zeros.power_on()) CHECK(b == 0x00);
        SramModel ones(std::vector<double>(SramModel::kCellCount, 1.0), 1);
        for (uint8_t b : ones.power_on()) CHECK(b == 0xFF);
    }

    SUBCASE("deterministic per seeds, fresh draws per startup") {
        SramModel a{SramConfig{}};
        SramModel b{SramConfig{}};
        const SramImage a1 = a.power_on();
        const SramImage a2 = a.power_on();
        CHECK(a1 == b.power_on());
        CHECK(a2 == b.power_on());
        CHECK(a1 != a2);
    }

    SUBCASE("bias table validation") {
        CHECK_THROWS_AS(SramModel(std::vector<double>(100, 0.5), 1), std::invalid_argument);
        CHECK_THROWS_AS(SramModel(std::vector<double>(SramModel::kCellCount, 1.5), 1),
                        std::invalid_argument);
        SramConfig bad;
        bad.flip_prob = 0.7;
        CHECK_THROWS_AS(SramModel{bad}, std::invalid_argument);
    }

    SUBCASE("distinct cells stay uncorrelated across startups") {
        SramModel model{SramConfig{}};
        constexpr int kStartups = 4000;
        // track eight mixed-bias cells; the correlation estimator has no
        // power on cells that flip only a handful of times per thousand draws
        size_t cells[8] = {0};
        size_t found = 0;
        const auto& bias = model.cell_bias();
        for (size_t i = 0; i < bias.size() && found < 8; i += 97)
            if (bias[i] > 0.3 && bias[i] < 0.7) cells[found++] = i;
        REQUIRE(found == 8);
        std::vector<std::array<double, 8>> values(kStartups);
        for (int s = 0; s < kStartups; ++s) {
            const SramImage img = model.power_on();
            for (int c = 0; c < 8; ++c) {
                const size_t bit = cells[c];
                values[s][c] = (img[bit / 8] >> (7 - bit % 8)) & 1;
            }
        }
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j) {
                double mi = 0, mj = 0;
                for (int s = 0; s < kStartups; ++s) {
                    mi += values[s][i];
                    mj += values[s][j];
                }
                mi /= kStartups;
                mj /= kStartups;
                double cov = 0, vi = 0, vj = 0;
                for (int s = 0; s < kStartups; ++s) {
                    cov += (values[s][i] - mi) * (values[s][j] - mj);
                    vi += (values[s][i] - mi) * (values[s][i] - mi);
                    vj += (values[s][j] - mj) * (values[s][j] - mj);
                }
                if (vi > 0 && vj > 0) CHECK(std::fabs(cov / std::sqrt(vi * vj)) < 0.05);
            }
    }
}

TEST_CASE("harvest loop") {
    SUBCASE("reseeds fire once pool 0 reaches the threshold") {
        VloModel vlo{VloConfig{}};
        TempModel temp{TempConfig{}};
        Accumulator acc;
        Generator gen;
        const auto stats = run_harvest(vlo, temp, acc, gen, 0.12);

        CHECK(stats.reseeds >= 1);
        CHECK(stats.first_reseed_pool0_events == 58);
        CHECK(stats.first_reseed_time_s > 0.0);
        CHECK(gen.seeded());

        // both sources contribute about equally at matched rates
        const double total = static_cast<double>(stats.vlo_events + stats.temp_events);
        CHECK(std::fabs(stats.vlo_events - total / 2.0) / total < 0.02);
        CHECK(stats.measured_event_rate_hz == doctest::Approx(19000.0).epsilon(0.02));

        // cadence diagnostic carries both interpretations
        CHECK(stats.cadence.gating_pool_seconds ==
              doctest::Approx(58.0 / stats.measured_event_rate_hz));
        CHECK(stats.cadence.round_robin_seconds ==
              doctest::Approx(58.0 * 32.0 / stats.measured_event_rate_hz));
    }

    SUBCASE("too few pool-0 events mean no reseed") {
        VloModel vlo{VloConfig{}};
        TempModel temp{TempConfig{}};
        Accumulator acc;
        Generator gen;
        const auto stats = run_harvest(vlo, temp, acc, gen, 0.05);
        CHECK(stats.reseeds == 0);
        CHECK_FALSE(gen.seeded());
    }

    SUBCASE("nonpositive duration is rejected") {
        VloModel vlo{VloConfig{}};
        TempModel temp{TempConfig{}};
        Accumulator acc;
        Generator gen;
        CHECK_THROWS_AS(run_harvest(vlo, temp, acc, gen, 0.0), std::invalid_argument);
    }
}
