#include "entrokit/accumulator.hpp"

#include <cmath>
#include <stdexcept>

namespace entrokit {

void Accumulator::add_event(const EntropyEvent& event) {
    if (event.payload.empty() || event.payload.size() > kMaxEventPayload)
        throw std::invalid_argument("event payload must be 1..32 bytes");

    std::lock_guard lock(mutex_);
    const int pool = next_pool_[event.source_tag];
    pools_[pool].update(event.payload);
    ++event_counts_[pool];
    next_pool_[event.source_tag] = static_cast<uint8_t>((pool + 1) % kNumPools);
}

bool Accumulator::ready_locked(double now_s) const {
    if (event_counts_[0] < config_.reseed_threshold) return false;
    if (config_.min_reseed_interval_s <= 0.0) return true;
    return now_s - last_reseed_s_ >= config_.min_reseed_interval_s;
}

bool Accumulator::reseed_ready() const {
    std::lock_guard lock(mutex_);
    return ready_locked(std::numeric_limits<double>::infinity());
}

bool Accumulator::reseed_ready(double now_s) const {
    std::lock_guard lock(mutex_);
    return ready_locked(now_s);
}

void Accumulator::reseed_locked(Generator& generator, double now_s) {
    if (!ready_locked(now_s)) throw std::logic_error("accumulator is not ready to reseed");

    ++reseed_count_;
    std::vector<uint8_t> material;
    for (int i = 0; i < kNumPools; ++i) {
        if ((reseed_count_ & ((uint64_t{1} << i) - 1)) != 0) continue; // 2^i | r
        const Digest256 digest = pools_[i].finalize_reset();
        material.insert(material.end(), digest.begin(), digest.end());
        event_counts_[i] = 0;
    }
    generator.reseed(material);
    if (std::isfinite(now_s)) last_reseed_s_ = now_s;
}

void Accumulator::reseed(Generator& generator) {
    std::lock_guard lock(mutex_);
    reseed_locked(generator, std::numeric_limits<double>::infinity());
}

void Accumulator::reseed(Generator& generator, double now_s) {
    std::lock_guard lock(mutex_);
    reseed_locked(generator, now_s);
}

uint64_t Accumulator::reseed_count() const {
    std::lock_guard lock(mutex_);
    return reseed_count_;
}

std::array<uint64_t, Accumulator::kNumPools> Accumulator::event_counts() const {
    std::lock_guard lock(mutex_);
    return event_counts_;
}

Digest256 Accumulator::peek_pool_digest(int pool) const {
    if (pool < 0 || pool >= kNumPools) throw std::invalid_argument("pool index out of range");
    std::lock_guard lock(mutex_);
    return pools_[pool].digest();
}

ReseedCadence reseed_cadence(double events_per_second, uint32_t threshold) {
    if (events_per_second <= 0.0) throw std::invalid_argument("event rate must be positive");
    return ReseedCadence{
        threshold / events_per_second,
        threshold * static_cast<double>(Accumulator::kNumPools) / events_per_second,
    };
}

} // namespace entrokit
