#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "gsd/bitvec.hpp"

namespace gsd {

using Codeword = BitVec;

// Strictly increasing coordinate indices in [0, 2^m). Every set handled by
// the shortening tree has power-of-two length.
using CoordSet = std::vector<std::uint32_t>;

// Reed-Muller code of order r and length 2^m.
//
// Coordinate convention: coordinate j is the evaluation point whose variable
// v_t equals bit t-1 of j (v_1 is the least significant bit). Under this
// ordering the Sylvester-Hadamard columns line up with the first-order
// codewords without any permutation.
//
// Generator rows are the evaluation vectors of all monomials of degree <= r
// in graded order: by degree first, then by monomial mask value, which for
// this variable numbering is lexicographic (v1 v2 < v1 v3 < v2 v3).
struct RmCode {
  unsigned order = 0;     // r
  unsigned log_len = 0;   // m
  std::size_t length = 0; // n = 2^m
  std::size_t dimension = 0;  // k = sum_{i<=r} C(m, i)

  std::vector<std::uint32_t> monomials;  // per-row variable masks, graded order
  std::vector<Codeword> generator;       // k rows of n bits

  // systematic extraction: info = (c at info_pivots) * info_transform
  std::vector<std::uint32_t> info_pivots;  // k coordinate positions
  std::vector<BitVec> info_transform;      // k rows of k bits

  std::size_t min_distance() const { return std::size_t{1} << (log_len - order); }
};

// Builds R(r, m). Requires 0 <= r <= m <= 16; the m cap bounds memory.
RmCode make_code(unsigned order, unsigned log_len);

// GF(2) combination of generator rows selected by `info` (length k).
Codeword encode(const RmCode& code, const BitVec& info);

// Recovers the information vector of a codeword from its bits at the stored
// information-set positions. Inverse of encode on codewords.
BitVec extract_info(const RmCode& code, const Codeword& c);

// Membership test via extract-and-reencode round trip.
bool is_codeword(const RmCode& code, const Codeword& c);

using Uint128 = unsigned __int128;

// Number of minimum-weight codewords:
//   A = 2^r * prod_{i=0}^{m-r-1} (2^{m-i} - 1) / (2^{m-r-i} - 1),
// evaluated exactly in integers.
Uint128 min_weight_count(const RmCode& code);

std::string to_decimal_string(Uint128 value);

// The 2^{m+1} - 2 codewords of weight 2^{m-1} in R(1, m). Entries [0, n-1)
// come from Sylvester-Hadamard columns 1..n-1 via c_j = (1 - H_{j,t}) / 2,
// i.e. c_j = parity(j & t); entries [n-1, 2n-2) are their complements in the
// same column order. This ordering is the alignment contract with
// child_heuristics.
std::vector<Codeword> first_order_halfweight(unsigned m);

// Depth-first stream over the shortening tree of R(r, m). A node carrying a
// coordinate set of length l has 2l - 2 children, one per half-weight
// first-order pattern restricted to its coordinates (first_order_halfweight
// order); leaves have length 2^{m-r} and are the supports of minimum-weight
// codewords. With dedup, each distinct support is emitted once and the total
// equals min_weight_count. Dedup keeps a set of all emitted supports; it is
// meant for tests and tools, not for the decoder hot path.
class MinWeightEnumerator {
 public:
  MinWeightEnumerator(const RmCode& code, bool dedup);

  // next leaf coordinate set, or nullopt when the tree is exhausted
  std::optional<CoordSet> next();

 private:
  struct Frame {
    CoordSet coords;
    std::size_t next_child = 0;
  };

  std::size_t length_;
  std::size_t leaf_len_;
  bool dedup_;
  std::optional<CoordSet> root_leaf_;  // r = 0: the root is the single leaf
  bool root_is_leaf_emitted_ = false;
  std::vector<Frame> stack_;
  std::unordered_set<BitVec, BitVecHash> seen_;
};

// Incidence vector of a coordinate set.
BitVec coords_to_bits(const CoordSet& coords, std::size_t length);

}  // namespace gsd
