#pragma once

#include <cstdint>

#include "gsd/bitvec.hpp"

namespace gsd {

// Bit-serial CRC over raw bit vectors. Polynomials are written in normal
// form with the implicit leading term. With reflect unset the register
// shifts MSB-first and the checksum bits are appended most significant
// first; with reflect set the register runs in the reflected (LSB-first)
// orientation and the checksum is appended least significant first.
struct CrcConfig {
  unsigned width = 16;
  std::uint32_t polynomial = 0x1021;
  std::uint32_t init = 0xFFFF;
  bool reflect = false;
  std::uint32_t xorout = 0;
};

// CRC-16/CCITT-FALSE; check value of "123456789" is 0x29B1.
inline CrcConfig default_crc16() { return CrcConfig{}; }

// Register value after feeding every payload bit, xorout applied.
std::uint32_t crc_bits(const BitVec& payload, const CrcConfig& cfg);

// payload followed by its width checksum bits
BitVec crc_append(const BitVec& payload, const CrcConfig& cfg);

// true iff the trailing width bits equal the CRC of the leading bits
bool crc_check(const BitVec& info, const CrcConfig& cfg);

}  // namespace gsd
