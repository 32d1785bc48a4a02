// The accumulator half of the PRNG: 32 entropy pools kept as incremental
// SHA-256 contexts. Events are routed round-robin per source; only the raw
// payload bytes enter a pool, never a source identifier. A reseed drains
// pool i when 2^i divides the new reseed counter and hands the concatenated
// digests to the generator.
#pragma once

#include "entrokit/crypto.hpp"
#include "entrokit/generator.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <mutex>
#include <span>
#include <vector>

namespace entrokit {

struct EntropyEvent {
    std::vector<uint8_t> payload; // 1..32 bytes of raw source data
    uint8_t source_tag = 0;       // routing only; never hashed
};

struct AccumulatorConfig {
    uint32_t reseed_threshold = 58;     // events required in pool 0
    double min_reseed_interval_s = 0.0; // optional guard, disabled by default
};

class Accumulator {
public:
    static constexpr int kNumPools = 32;
    static constexpr size_t kMaxEventPayload = 32;

    explicit Accumulator(AccumulatorConfig config = {}) : config_(config) {}

    // Safe for concurrent producers; effects are linearizable.
    void add_event(const EntropyEvent& event);

    bool reseed_ready() const;
    bool reseed_ready(double now_s) const;

    // Drains the scheduled pools into generator.reseed(). Throws
    // std::logic_error when called without reseed_ready().
    void reseed(Generator& generator);
    void reseed(Generator& generator, double now_s);

    uint64_t reseed_count() const;
    std::array<uint64_t, kNumPools> event_counts() const;

    // Digest the pool would currently produce, without disturbing it.
    Digest256 peek_pool_digest(int pool) const;

    const AccumulatorConfig& config() const { return config_; }

private:
    bool ready_locked(double now_s) const;
    void reseed_locked(Generator& generator, double now_s);

    AccumulatorConfig config_;
    mutable std::mutex mutex_;
    std::array<Sha256, kNumPools> pools_{};
    std::array<uint64_t, kNumPools> event_counts_{};
    std::array<uint8_t, 256> next_pool_{}; // per-source round-robin cursor
    uint64_t reseed_count_ = 0;
    double last_reseed_s_ = -std::numeric_limits<double>::infinity();
};

// The two readings of "58 events to reseed" at a given aggregate event rate:
// the single-pool reading treats the rate as arrivals into the gating pool,
// the round-robin reading accounts for distribution across all 32 pools.
struct ReseedCadence {
    double gating_pool_seconds; // threshold / rate
    double round_robin_seconds; // threshold * 32 / rate
};

ReseedCadence reseed_cadence(double events_per_second, uint32_t threshold = 58);

} // namespace entrokit
