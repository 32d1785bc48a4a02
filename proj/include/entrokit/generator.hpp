// The generator half of the PRNG: AES-256 in counter mode keyed by a 256-bit
// secret, with the key replaced by two extra cipher blocks after every data
// request. Reseeding chains new material through SHA-256 over the old key.
//
// A Generator is a single-writer value: move it between threads freely, but
// serialize concurrent operations on one instance externally.
#pragma once

#include "entrokit/crypto.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace entrokit {

using GeneratorKey = std::array<uint8_t, 32>;

// 128-bit block counter, serialized big-endian as the cipher plaintext.
// Wrapping would repeat cipher inputs under the same key, so any operation
// that would overflow throws instead.
struct Counter128 {
    uint64_t hi = 0;
    uint64_t lo = 0;

    void add(uint64_t k);
    std::array<uint8_t, 16> to_bytes_be() const;
    bool is_zero() const { return hi == 0 && lo == 0; }

    friend auto operator<=>(const Counter128&, const Counter128&) = default;
};

class Generator {
public:
    static constexpr size_t kBlockBytes = 16;
    static constexpr size_t kMaxRequestBytes = 1u << 20;

    // Fresh state: all-zero key, zero counter, unseeded.
    Generator() = default;

    // Explicit state, used by known-answer fixtures.
    Generator(const GeneratorKey& key, Counter128 counter, bool seeded)
        : key_(key), counter_(counter), seeded_(seeded) {}

    // key' = SHA-256(key || seed_material), counter incremented.
    void reseed(std::span<const uint8_t> seed_material);

    // k cipher blocks of counter-mode output; counter advances by k.
    std::vector<uint8_t> generate_blocks(uint64_t k);

    // n bytes of output (1..2^20), then two further blocks become the new key.
    std::vector<uint8_t> pseudo_random_data(size_t n);

    bool seeded() const { return seeded_; }
    const GeneratorKey& key() const { return key_; }
    Counter128 counter() const { return counter_; }

private:
    GeneratorKey key_{};
    Counter128 counter_{};
    bool seeded_ = false;
};

} // namespace entrokit
