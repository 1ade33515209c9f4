#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gsd/rm_code.hpp"
#include "gsd/rng.hpp"

namespace gsd {

// Brute-force references. These are shipped (the CLI exposes them for tiny
// codes) but enforce hard dimension caps; they are not decoders for real use.

inline constexpr unsigned kMaxEnumerationDim = 24;  // 2^k sweeps stay feasible

struct OracleDecode {
  Codeword codeword;
  double metric = 0.0;
};

struct TraversalDecode {
  Codeword codeword;
  double metric = 0.0;
  std::uint64_t nodes_visited = 0;
};

// Exhaustive maximum of the correlation metric over all 2^k codewords.
// Ties go to the lexicographically smallest codeword. Requires k <= 24.
OracleDecode ml_decode_bruteforce(const RmCode& code, std::span<const double> y);

// Breadth-first traversal from a random codeword along minimum-weight-XOR
// edges; returns the best-metric node and the number of distinct nodes
// reached. Requires k <= 24.
TraversalDecode graph_traversal_decode(const RmCode& code, std::span<const double> y, Rng& rng);

// All codewords of weight exactly 2^{m-r}. Requires k <= 24, or k <= 32 for
// codes short enough to sweep in a single machine word (n <= 64).
std::vector<Codeword> min_weight_bruteforce(const RmCode& code);

}  // namespace gsd
