#include "entrokit/seed_extract.hpp"

#include "entrokit/crc16.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace entrokit {

SramImage to_sram_image(std::span<const uint8_t> raw) {
    if (raw.size() != kSramImageBytes)
        throw std::invalid_argument("malformed SRAM image: expected " +
                                    std::to_string(kSramImageBytes) + " bytes, got " +
                                    std::to_string(raw.size()));
    SramImage image;
    std::copy(raw.begin(), raw.end(), image.begin());
    return image;
}

Seed extract_seed(const SramImage& image) {
    static_assert(kSramImageBytes / kSeedBlockBytes == 2 * kSeedBytes / sizeof(uint16_t));
    constexpr size_t kBlocks = kSramImageBytes / kSeedBlockBytes; // 64

    std::array<uint8_t, 2 * kSeedBytes> mixed{};
    for (size_t k = 0; k < kBlocks; ++k) {
        const uint16_t v =
            crc16(std::span<const uint8_t>(image.data() + k * kSeedBlockBytes, kSeedBlockBytes));
        mixed[2 * k] = static_cast<uint8_t>(v >> 8);
        mixed[2 * k + 1] = static_cast<uint8_t>(v & 0xFF);
    }

    Seed seed{};
    for (size_t i = 0; i < kSeedBytes; ++i) seed[i] = mixed[i] ^ mixed[i + kSeedBytes];
    return seed;
}

} // namespace entrokit
