// Boot-time seed extraction: a 10 KB power-on SRAM image is mixed down to a
// 64-byte generator seed. The image is split into 64 blocks of 160 bytes,
// each block collapses to a 16-bit CRC, the CRC values are serialized
// big-endian into a 128-byte vector, and the two halves of that vector are
// XOR-folded into the final seed.
#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace entrokit {

inline constexpr size_t kSramImageBytes = 10240;
inline constexpr size_t kSeedBlockBytes = 160;
inline constexpr size_t kSeedBytes = 64;

using SramImage = std::array<uint8_t, kSramImageBytes>;
using Seed = std::array<uint8_t, kSeedBytes>;

// Throws std::invalid_argument unless exactly kSramImageBytes long.
SramImage to_sram_image(std::span<const uint8_t> raw);

Seed extract_seed(const SramImage& image);

} // namespace entrokit
