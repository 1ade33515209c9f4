#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_set>

#include "gsd/bitvec.hpp"
#include "gsd/channel.hpp"
#include "gsd/crc.hpp"
#include "gsd/rm_code.hpp"
#include "gsd/rng.hpp"
#include "gsd/transform.hpp"

namespace gsd {

// Exact membership set of walked codewords; no false positives or negatives.
using VisitedSet = std::unordered_set<Codeword, BitVecHash>;

struct SearchParams {
  double budget_units = 1024.0;    // FHT budget, in units of one length-n transform
  std::uint64_t max_moves = 1024;  // N
  unsigned breadth = 8;            // l: root children descended per step
  unsigned extra_breadth = 8;      // l-hat: extra children when the first l were all visited
  unsigned extra_expansions = 5;   // s: lifetime cap on extra-children expansions
  bool crc_terminate = false;      // t
  std::optional<CrcConfig> crc;
};

enum class Termination : unsigned {
  kBudgetExhausted = 0,
  kMaxMoves = 1,
  kNeighborsExhausted = 2,
  kCrcHit = 3,
};
std::string_view to_string(Termination t);

// Result of one depth-first descent to a leaf of the shortening tree.
struct DescentOutcome {
  Codeword codeword;       // current codeword flipped on the leaf support
  double leaf_sum = 0.0;   // sum of sign-adjusted LLRs over the flipped support
  bool already_visited = false;  // the flipped codeword was in the visited set
};

// Result of one NextStep call. The +-infinity sentinels of the walk are
// explicit flags here, never floating-point infinities.
struct StepOutcome {
  Codeword candidate;
  double metric = 0.0;    // full metric of the candidate; valid only when found
  double leaf_sum = 0.0;  // smallest leaf sum among descents that found a new codeword
  bool found = false;     // false: every attempted leaf was already visited
  bool extra_children_used = false;  // ec flag of the step
};

struct DecodeResult {
  Codeword codeword;
  double metric = 0.0;
  double fht_units = 0.0;
  std::uint64_t moves = 0;
  Termination termination = Termination::kMaxMoves;
  FhtCounter counter;  // raw FHT call counts by length, for inspection
  unsigned extra_expansions_used = 0;
};

// Correlation metric M = sum_i (1 - 2 c_i) y_i; the ML codeword maximizes it.
double metric(const Codeword& c, std::span<const double> y);

// Greedy depth-first descent. `y_signed` is the sign-adjusted LLR vector
// (1 - 2 current_i) y_i; `coords` is the entered node's coordinate set and
// `entry_sum` its heuristic as computed by the caller. At each level the
// child with the minimum heuristic is taken (ties: lowest index). At the
// leaf the current codeword is flipped on the leaf support; a flip landing
// in `visited` reports already_visited instead of a candidate.
DescentOutcome next_step_descent(const RmCode& code, std::span<const double> y_signed,
                                 CoordSet coords, double entry_sum,
                                 const VisitedSet& visited, const Codeword& current,
                                 FhtCounter& counter);

// One greedy NextStep: ranks all 2n-2 root children by heuristic, descends
// the best `breadth` of them (plus up to `extra_breadth` more if the first
// l candidates were all visited, which raises the ec flag), stops as soon
// as a metric-improving new codeword appears, and returns the candidate
// with the smallest leaf sum.
StepOutcome next_step_greedy(const RmCode& code, std::span<const double> y,
                             const Codeword& current, const VisitedSet& visited,
                             unsigned breadth, unsigned extra_breadth,
                             FhtCounter& counter);

// The budgeted local-search walk. Starts from a uniformly random codeword,
// always moves to the step's candidate (even a worse one), tracks the best
// metric seen, and stops on budget, move cap, exhausted neighborhoods, or
// a CRC hit on a newly improved best codeword.
DecodeResult graph_search(const RmCode& code, std::span<const double> y,
                          const SearchParams& params, Rng& rng);

// Normalized cost sum(len_i / ref_len) of a list of FHT lengths.
double fht_unit_cost(std::span<const std::size_t> lengths, std::size_t ref_len);

}  // namespace gsd
