#include "gsd/crc.hpp"

#include <stdexcept>

namespace gsd {

namespace {

void validate(const CrcConfig& cfg) {
  if (cfg.width < 4 || cfg.width > 32)
    throw std::invalid_argument("crc: width must be in [4, 32]");
}

std::uint32_t width_mask(unsigned width) {
  return width == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << width) - 1;
}

std::uint32_t bit_reflect(std::uint32_t value, unsigned width) {
  std::uint32_t out = 0;
  for (unsigned i = 0; i < width; ++i)
    if ((value >> i) & 1) out |= std::uint32_t{1} << (width - 1 - i);
  return out;
}

}  // namespace

std::uint32_t crc_bits(const BitVec& payload, const CrcConfig& cfg) {
  validate(cfg);
  const std::uint32_t mask = width_mask(cfg.width);
  if (!cfg.reflect) {
    std::uint32_t reg = cfg.init & mask;
    const std::uint32_t poly = cfg.polynomial & mask;
    const std::uint32_t top = std::uint32_t{1} << (cfg.width - 1);
    for (std::size_t i = 0; i < payload.size(); ++i) {
      const bool feed = payload.get(i) ^ ((reg & top) != 0);
      reg = (reg << 1) & mask;
      if (feed) reg ^= poly;
    }
    return (reg ^ cfg.xorout) & mask;
  }
  std::uint32_t reg = cfg.init & mask;
  const std::uint32_t poly = bit_reflect(cfg.polynomial & mask, cfg.width);
  for (std::size_t i = 0; i < payload.size(); ++i) {
    const bool feed = payload.get(i) ^ (reg & 1);
    reg >>= 1;
    if (feed) reg ^= poly;
  }
  return (reg ^ cfg.xorout) & mask;
}

BitVec crc_append(const BitVec& payload, const CrcConfig& cfg) {
  const std::uint32_t crc = crc_bits(payload, cfg);
  BitVec out(payload.size() + cfg.width);
  for (std::size_t i = 0; i < payload.size(); ++i) out.set(i, payload.get(i));
  for (unsigned i = 0; i < cfg.width; ++i) {
    const unsigned bit = cfg.reflect ? i : cfg.width - 1 - i;
    out.set(payload.size() + i, (crc >> bit) & 1);
  }
  return out;
}

bool crc_check(const BitVec& info, const CrcConfig& cfg) {
  validate(cfg);
  if (info.size() < cfg.width)
    throw std::invalid_argument("crc_check: info shorter than the CRC width");
  const std::size_t payload_len = info.size() - cfg.width;
  BitVec payload(payload_len);
  for (std::size_t i = 0; i < payload_len; ++i) payload.set(i, info.get(i));
  const std::uint32_t crc = crc_bits(payload, cfg);
  for (unsigned i = 0; i < cfg.width; ++i) {
    const unsigned bit = cfg.reflect ? i : cfg.width - 1 - i;
    if (info.get(payload_len + i) != (((crc >> bit) & 1) != 0)) return false;
  }
  return true;
}

}  // namespace gsd
