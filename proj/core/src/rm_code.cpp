#include "gsd/rm_code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gsd {

namespace {

// Word w of the evaluation vector of variable v_{t+1} (bit t of the point
// index): for t < 6 the word is a fixed tiling, above that it is constant
// over the word.
std::uint64_t variable_word(unsigned t, std::size_t word_index) {
  static constexpr std::uint64_t kLow[6] = {
      0xAAAAAAAAAAAAAAAAull,  // bit 0 of j
      0xCCCCCCCCCCCCCCCCull,  // bit 1
      0xF0F0F0F0F0F0F0F0ull,  // bit 2
      0xFF00FF00FF00FF00ull,  // bit 3
      0xFFFF0000FFFF0000ull,  // bit 4
      0xFFFFFFFF00000000ull,  // bit 5
  };
  if (t < 6) return kLow[t];
  return (word_index >> (t - 6)) & 1 ? ~std::uint64_t{0} : std::uint64_t{0};
}

// Evaluation vector of the monomial given by `mask` over all 2^m points.
Codeword monomial_row(std::uint32_t mask, unsigned m) {
  const std::size_t n = std::size_t{1} << m;
  Codeword row(n);
  auto words = row.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t acc = ~std::uint64_t{0};
    for (unsigned t = 0; t < m; ++t)
      if ((mask >> t) & 1) acc &= variable_word(t, w);
    words[w] = acc;
  }
  if (n < 64) words[0] &= (std::uint64_t{1} << n) - 1;
  return row;
}

Uint128 gcd128(Uint128 a, Uint128 b) {
  while (b) {
    const Uint128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

RmCode make_code(unsigned order, unsigned log_len) {
  if (order > log_len) throw std::invalid_argument("make_code: order must satisfy r <= m");
  if (log_len > 16) throw std::invalid_argument("make_code: log_len must satisfy m <= 16");

  RmCode code;
  code.order = order;
  code.log_len = log_len;
  code.length = std::size_t{1} << log_len;

  // monomial masks of degree <= r, graded order
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << log_len); ++mask)
    if (static_cast<unsigned>(std::popcount(mask)) <= order) code.monomials.push_back(mask);
  std::sort(code.monomials.begin(), code.monomials.end(),
            [](std::uint32_t a, std::uint32_t b) {
              const int da = std::popcount(a), db = std::popcount(b);
              return da != db ? da < db : a < b;
            });
  code.dimension = code.monomials.size();

  code.generator.reserve(code.dimension);
  for (std::uint32_t mask : code.monomials)
    code.generator.push_back(monomial_row(mask, log_len));

  // Gauss-Jordan over a working copy; track the row transform T so that
  // info = (codeword at pivots) * T. R = T * G is in reduced row echelon
  // form with identity on the pivot columns.
  const std::size_t k = code.dimension;
  std::vector<BitVec> work = code.generator;
  std::vector<BitVec> transform(k, BitVec(k));
  for (std::size_t i = 0; i < k; ++i) transform[i].set(i, true);

  std::size_t rank = 0;
  for (std::size_t col = 0; col < code.length && rank < k; ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < k && !work[pivot_row].get(col)) ++pivot_row;
    if (pivot_row == k) continue;
    std::swap(work[pivot_row], work[rank]);
    std::swap(transform[pivot_row], transform[rank]);
    for (std::size_t row = 0; row < k; ++row) {
      if (row != rank && work[row].get(col)) {
        work[row].xor_with(work[rank]);
        transform[row].xor_with(transform[rank]);
      }
    }
    code.info_pivots.push_back(static_cast<std::uint32_t>(col));
    ++rank;
  }
  if (rank != k) throw std::logic_error("make_code: generator rows are not independent");
  code.info_transform = std::move(transform);
  return code;
}

Codeword encode(const RmCode& code, const BitVec& info) {
  if (info.size() != code.dimension)
    throw std::invalid_argument("encode: info length must equal the code dimension k");
  Codeword out(code.length);
  for (std::size_t i = 0; i < code.dimension; ++i)
    if (info.get(i)) out.xor_with(code.generator[i]);
  return out;
}

BitVec extract_info(const RmCode& code, const Codeword& c) {
  if (c.size() != code.length)
    throw std::invalid_argument("extract_info: codeword length must equal n");
  BitVec info(code.dimension);
  for (std::size_t i = 0; i < code.dimension; ++i)
    if (c.get(code.info_pivots[i])) info.xor_with(code.info_transform[i]);
  return info;
}

bool is_codeword(const RmCode& code, const Codeword& c) {
  if (c.size() != code.length) return false;
  return encode(code, extract_info(code, c)) == c;
}

Uint128 min_weight_count(const RmCode& code) {
  const unsigned r = code.order, m = code.log_len;
  Uint128 num = Uint128{1} << r;
  Uint128 den = 1;
  for (unsigned i = 0; r + i < m; ++i) {
    num *= (Uint128{1} << (m - i)) - 1;
    den *= (Uint128{1} << (m - r - i)) - 1;
    const Uint128 g = gcd128(num, den);
    num /= g;
    den /= g;
  }
  if (den != 1) throw std::logic_error("min_weight_count: non-exact division");
  return num;
}

std::string to_decimal_string(Uint128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value) {
    digits.push_back(static_cast<char>('0' + static_cast<unsigned>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::vector<Codeword> first_order_halfweight(unsigned m) {
  if (m < 1) throw std::invalid_argument("first_order_halfweight: m must be >= 1");
  if (m > 16) throw std::invalid_argument("first_order_halfweight: m must be <= 16");
  const std::size_t n = std::size_t{1} << m;
  std::vector<Codeword> patterns;
  patterns.reserve(2 * n - 2);

  for (std::size_t t = 1; t < n; ++t) {
    Codeword w(n);
    auto words = w.words();
    // bit j = parity(j & t); split j into its low 6 bits and the word index
    std::uint64_t low = 0;
    for (unsigned b = 0; b < 6 && b < m; ++b)
      if ((t >> b) & 1) low ^= variable_word(b, 0);
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
      const bool high_parity = std::popcount((wi >> 0) & (t >> 6)) & 1;
      words[wi] = high_parity ? ~low : low;
    }
    if (n < 64) words[0] &= (std::uint64_t{1} << n) - 1;
    patterns.push_back(std::move(w));
  }
  for (std::size_t t = 1; t < n; ++t) {
    Codeword w = patterns[t - 1];
    auto words = w.words();
    for (auto& word : words) word = ~word;
    if (n < 64) words[0] &= (std::uint64_t{1} << n) - 1;
    patterns.push_back(std::move(w));
  }
  return patterns;
}

BitVec coords_to_bits(const CoordSet& coords, std::size_t length) {
  BitVec bits(length);
  for (auto c : coords) bits.set(c, true);
  return bits;
}

MinWeightEnumerator::MinWeightEnumerator(const RmCode& code, bool dedup)
    : length_(code.length), leaf_len_(code.min_distance()), dedup_(dedup) {
  CoordSet root(code.length);
  for (std::size_t j = 0; j < code.length; ++j) root[j] = static_cast<std::uint32_t>(j);
  if (leaf_len_ == length_) {
    // r = 0: the root itself is the single leaf
    stack_.clear();
    root_leaf_ = std::move(root);
  } else {
    stack_.push_back(Frame{std::move(root), 0});
  }
}

std::optional<CoordSet> MinWeightEnumerator::next() {
  if (root_leaf_) {
    if (root_is_leaf_emitted_) return std::nullopt;
    root_is_leaf_emitted_ = true;
    return *root_leaf_;
  }
  while (!stack_.empty()) {
    Frame& frame = stack_.back();
    const std::size_t len = frame.coords.size();
    const std::size_t num_children = 2 * len - 2;
    if (frame.next_child >= num_children) {
      stack_.pop_back();
      continue;
    }
    const std::size_t child = frame.next_child++;
    // child patterns follow the first_order_halfweight order restricted to
    // the node's coordinates: directs keep parity(j & t) == 1, complements
    // keep parity(j & t) == 0
    const bool complement = child >= len - 1;
    const std::size_t t = complement ? child - (len - 1) + 1 : child + 1;
    CoordSet coords;
    coords.reserve(len / 2);
    for (std::size_t j = 0; j < len; ++j) {
      const bool parity = std::popcount(j & t) & 1;
      if (parity != complement) coords.push_back(frame.coords[j]);
    }
    if (coords.size() == leaf_len_) {
      if (dedup_) {
        BitVec key = coords_to_bits(coords, length_);
        if (!seen_.insert(std::move(key)).second) continue;
      }
      return coords;
    }
    stack_.push_back(Frame{std::move(coords), 0});
  }
  return std::nullopt;
}

}  // namespace gsd
