// CRC-CCITT-16: generator polynomial x^16 + x^12 + x^5 + 1 (0x1021),
// MSB-first, no input/output reflection, no final XOR. The default initial
// register is 0xFFFF; an all-zero init is accepted so the GF(2) linearity of
// the underlying cyclic code stays testable.
#pragma once

#include <cstdint>
#include <span>

namespace entrokit {

inline constexpr uint16_t kCrc16Poly = 0x1021;
inline constexpr uint16_t kCrc16Init = 0xFFFF;

struct CrcState {
    uint16_t reg = kCrc16Init;
};

CrcState crc16_init();
CrcState crc16_update(CrcState state, uint8_t byte);
uint16_t crc16_final(CrcState state);

uint16_t crc16(std::span<const uint8_t> block, uint16_t init = kCrc16Init);

} // namespace entrokit
