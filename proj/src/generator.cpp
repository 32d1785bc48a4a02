#include "entrokit/generator.hpp"

#include <limits>
#include <stdexcept>

namespace entrokit {

void Counter128::add(uint64_t k) {
    const uint64_t new_lo = lo + k;
    if (new_lo < lo) {
        if (hi == std::numeric_limits<uint64_t>::max())
            throw std::overflow_error("generator counter would wrap");
        ++hi;
    }
    lo = new_lo;
}

std::array<uint8_t, 16> Counter128::to_bytes_be() const {
    std::array<uint8_t, 16> out;
    for (int i = 0; i < 8; ++i) out[i] = static_cast<uint8_t>(hi >> (56 - 8 * i));
    for (int i = 0; i < 8; ++i) out[8 + i] = static_cast<uint8_t>(lo >> (56 - 8 * i));
    return out;
}

void Generator::reseed(std::span<const uint8_t> seed_material) {
    if (seed_material.empty()) throw std::invalid_argument("reseed requires non-empty material");
    Sha256 h;
    h.update(key_);
    h.update(seed_material);
    key_ = h.finalize_reset();
    counter_.add(1);
    seeded_ = true;
}

std::vector<uint8_t> Generator::generate_blocks(uint64_t k) {
    if (!seeded_) throw std::logic_error("generator is unseeded");
    if (k == 0) throw std::invalid_argument("block count must be positive");

    std::vector<uint8_t> plaintext(k * kBlockBytes);
    Counter128 c = counter_;
    for (uint64_t i = 0; i < k; ++i) {
        const auto bytes = c.to_bytes_be();
        std::copy(bytes.begin(), bytes.end(), plaintext.begin() + i * kBlockBytes);
        c.add(1);
    }
    counter_ = c;

    std::vector<uint8_t> out(plaintext.size());
    Aes256(std::span<const uint8_t, 32>(key_)).encrypt(plaintext, out);
    return out;
}

std::vector<uint8_t> Generator::pseudo_random_data(size_t n) {
    if (n == 0 || n > kMaxRequestBytes)
        throw std::invalid_argument("request size must be in [1, 2^20] bytes");
    if (!seeded_) throw std::logic_error("generator is unseeded");

    const uint64_t blocks = (n + kBlockBytes - 1) / kBlockBytes;
    std::vector<uint8_t> out = generate_blocks(blocks);
    out.resize(n);

    // Key rotation: the next two blocks become the new key.
    const std::vector<uint8_t> rot = generate_blocks(2);
    std::copy(rot.begin(), rot.end(), key_.begin());
    return out;
}

} // namespace entrokit
