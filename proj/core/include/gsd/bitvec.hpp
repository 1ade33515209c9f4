#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gsd {

// Packed bit vector over GF(2). Bit i lives in word i/64 at position i%64.
// Bits past size() are kept zero, so whole-word equality and hashing are
// valid membership tests.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  // Parses "0101..."; character position == coordinate index.
  static BitVec from_string(std::string_view bits);

  std::size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  void xor_with(const BitVec& other);
  std::size_t popcount() const;
  bool none() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  std::string to_string() const;

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Orders bit sequences by the first differing coordinate, 0 before 1.
bool lex_less(const BitVec& a, const BitVec& b);

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const;
};

// Rank of the rows over GF(2). Takes the rows by value as elimination scratch.
std::size_t gf2_rank(std::vector<BitVec> rows);

}  // namespace gsd
