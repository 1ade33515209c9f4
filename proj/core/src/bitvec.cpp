#include "gsd/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace gsd {

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i, true);
    else if (bits[i] != '0')
      throw std::invalid_argument("BitVec::from_string: character is not 0 or 1");
  }
  return v;
}

void BitVec::xor_with(const BitVec& other) {
  if (other.nbits_ != nbits_) throw std::invalid_argument("BitVec::xor_with: size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

std::size_t BitVec::popcount() const {
  std::size_t count = 0;
  for (std::uint64_t w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

bool BitVec::none() const {
  for (std::uint64_t w : words_)
    if (w) return false;
  return true;
}

std::string BitVec::to_string() const {
  std::string s(nbits_, '0');
  for (std::size_t i = 0; i < nbits_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

bool lex_less(const BitVec& a, const BitVec& b) {
  const auto wa = a.words(), wb = b.words();
  const std::size_t common = wa.size() < wb.size() ? wa.size() : wb.size();
  for (std::size_t i = 0; i < common; ++i) {
    const std::uint64_t diff = wa[i] ^ wb[i];
    if (diff) {
      // lowest differing bit decides; the vector holding 0 there is smaller
      const std::uint64_t low = diff & (~diff + 1);
      return (wa[i] & low) == 0;
    }
  }
  return a.size() < b.size();
}

std::size_t BitVecHash::operator()(const BitVec& v) const {
  // splitmix64-style mixing of the words
  std::uint64_t h = 0x9E3779B97F4A7C15ull ^ v.size();
  for (std::uint64_t w : v.words()) {
    std::uint64_t z = h ^ w;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    h = z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

namespace {

// index of the lowest set bit, or size() when none
std::size_t find_first(const BitVec& v) {
  const auto words = v.words();
  for (std::size_t i = 0; i < words.size(); ++i)
    if (words[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words[i]));
  return v.size();
}

}  // namespace

std::size_t gf2_rank(std::vector<BitVec> rows) {
  // incremental reduced basis: (pivot position, reduced row)
  std::vector<std::pair<std::size_t, BitVec>> basis;
  for (auto& row : rows) {
    for (const auto& [pivot, base] : basis)
      if (pivot < row.size() && row.get(pivot)) row.xor_with(base);
    const std::size_t pivot = find_first(row);
    if (pivot < row.size()) basis.emplace_back(pivot, std::move(row));
  }
  return basis.size();
}

}  // namespace gsd
