#include "entrokit/crc16.hpp"

#include <array>

namespace entrokit {

namespace {

constexpr std::array<uint16_t, 256> make_table() {
    std::array<uint16_t, 256> table{};
    for (uint32_t i = 0; i < 256; ++i) {
        uint16_t crc = static_cast<uint16_t>(i << 8);
        for (int bit = 0; bit < 8; ++bit)
            crc = (crc & 0x8000) ? static_cast<uint16_t>((crc << 1) ^ kCrc16Poly)
                                 : static_cast<uint16_t>(crc << 1);
        table[i] = crc;
    }
    return table;
}

constexpr auto kTable = make_table();

} // namespace

CrcState crc16_init() { return CrcState{kCrc16Init}; }

CrcState crc16_update(CrcState state, uint8_t byte) {
    state.reg = static_cast<uint16_t>((state.reg << 8) ^ kTable[((state.reg >> 8) ^ byte) & 0xFF]);
    return state;
}

uint16_t crc16_final(CrcState state) { return state.reg; }

uint16_t crc16(std::span<const uint8_t> block, uint16_t init) {
    CrcState state{init};
    for (uint8_t b : block) state = crc16_update(state, b);
    return crc16_final(state);
}

} // namespace entrokit
