#include "gsd/decoder.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gsd {

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::kBudgetExhausted: return "budget_exhausted";
    case Termination::kMaxMoves: return "max_moves";
    case Termination::kNeighborsExhausted: return "neighbors_exhausted";
    case Termination::kCrcHit: return "crc_hit";
  }
  return "unknown";
}

double metric(const Codeword& c, std::span<const double> y) {
  if (c.size() != y.size()) throw std::invalid_argument("metric: length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) sum += c.get(i) ? -y[i] : y[i];
  return sum;
}

namespace {

// argmin over the 2l-2 child heuristics of a transformed segment, lowest
// index on ties. h holds the FHT of the segment.
std::size_t argmin_child(std::span<const double> h, double& min_value) {
  const std::size_t len = h.size();
  const double total = h[0];
  std::size_t best = 0;
  double best_value = 0.5 * (total - h[1]);
  for (std::size_t t = 2; t < len; ++t) {
    const double value = 0.5 * (total - h[t]);
    if (value < best_value) {
      best_value = value;
      best = t - 1;
    }
  }
  for (std::size_t t = 1; t < len; ++t) {
    const double value = 0.5 * (total + h[t]);
    if (value < best_value) {
      best_value = value;
      best = len - 1 + t - 1;
    }
  }
  min_value = best_value;
  return best;
}

// keeps positions j of [0, len) with parity(j & t) == 1 (direct pattern) or
// == 0 (complement), mapping through `coords` when given
void filter_coords(const CoordSet* coords, std::size_t len, std::size_t child_index,
                   CoordSet& out) {
  const bool complement = child_index >= len - 1;
  const std::size_t t = complement ? child_index - (len - 1) + 1 : child_index + 1;
  out.clear();
  out.reserve(len / 2);
  for (std::size_t j = 0; j < len; ++j) {
    const bool parity = std::popcount(j & t) & 1;
    if (parity != complement)
      out.push_back(coords ? (*coords)[j] : static_cast<std::uint32_t>(j));
  }
}

}  // namespace

DescentOutcome next_step_descent(const RmCode& code, std::span<const double> y_signed,
                                 CoordSet coords, double entry_sum,
                                 const VisitedSet& visited, const Codeword& current,
                                 FhtCounter& counter) {
  const std::size_t leaf_len = code.min_distance();
  double sum = entry_sum;
  std::vector<double> segment;
  CoordSet child;

  while (coords.size() > leaf_len) {
    const std::size_t len = coords.size();
    segment.resize(len);
    for (std::size_t j = 0; j < len; ++j) segment[j] = y_signed[coords[j]];
    fht(segment, &counter);
    const std::size_t best = argmin_child(segment, sum);
    filter_coords(&coords, len, best, child);
    coords.swap(child);
  }

  Codeword flipped = current;
  for (auto idx : coords) flipped.flip(idx);
  if (visited.contains(flipped)) return DescentOutcome{std::move(flipped), sum, true};
  return DescentOutcome{std::move(flipped), sum, false};
}

StepOutcome next_step_greedy(const RmCode& code, std::span<const double> y,
                             const Codeword& current, const VisitedSet& visited,
                             unsigned breadth, unsigned extra_breadth,
                             FhtCounter& counter) {
  if (y.size() != code.length) throw std::invalid_argument("next_step_greedy: length mismatch");
  if (breadth < 1) throw std::invalid_argument("next_step_greedy: breadth must be >= 1");
  const std::size_t n = code.length;
  const double current_metric = metric(current, y);

  // sign-adjusted LLRs: flipping a set S changes the metric by -2 sum_S y_signed
  std::vector<double> y_signed(n);
  for (std::size_t i = 0; i < n; ++i) y_signed[i] = current.get(i) ? -y[i] : y[i];

  StepOutcome out;
  out.candidate = current;

  if (code.order == 0) {
    // repetition code: the only neighbor is the complement
    Codeword flipped = current;
    for (auto& word : flipped.words()) word = ~word;
    if (n < 64) flipped.words()[0] &= (std::uint64_t{1} << n) - 1;
    if (visited.contains(flipped)) return out;
    const double leaf_sum = std::accumulate(y_signed.begin(), y_signed.end(), 0.0);
    out.candidate = std::move(flipped);
    out.leaf_sum = leaf_sum;
    out.metric = current_metric - 2.0 * leaf_sum;
    out.found = true;
    return out;
  }

  // heuristics of all 2n-2 root children from one full-length FHT
  std::vector<double> transformed = y_signed;
  fht(transformed, &counter);
  const double total = transformed[0];
  std::vector<double> heur(2 * n - 2);
  for (std::size_t t = 1; t < n; ++t) {
    heur[t - 1] = 0.5 * (total - transformed[t]);
    heur[n - 1 + t - 1] = 0.5 * (total + transformed[t]);
  }
  std::vector<std::uint32_t> order(heur.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return heur[a] != heur[b] ? heur[a] < heur[b] : a < b;
  });

  const std::size_t limit =
      std::min<std::size_t>(heur.size(), std::size_t{breadth} + extra_breadth);
  double best_sum = 0.0;
  CoordSet coords;
  for (std::size_t i = 0; i < limit; ++i) {
    if (i >= breadth) {
      if (out.found) break;  // extras run only while nothing new was found
      out.extra_children_used = true;
    }
    const std::uint32_t idx = order[i];
    filter_coords(nullptr, n, idx, coords);
    DescentOutcome descent =
        next_step_descent(code, y_signed, coords, heur[idx], visited, current, counter);
    if (descent.already_visited) continue;
    if (!out.found || descent.leaf_sum < best_sum) {
      best_sum = descent.leaf_sum;
      out.candidate = std::move(descent.codeword);
      out.found = true;
    }
    if (out.found && best_sum < 0.0) break;  // the move already improves the metric
  }

  if (out.found) {
    out.leaf_sum = best_sum;
    out.metric = current_metric - 2.0 * best_sum;
  }
  return out;
}

DecodeResult graph_search(const RmCode& code, std::span<const double> y,
                          const SearchParams& params, Rng& rng) {
  if (y.size() != code.length) throw std::invalid_argument("graph_search: length mismatch");
  if (params.breadth < 1) throw std::invalid_argument("graph_search: breadth_l must be >= 1");
  if (!(params.budget_units > 0.0))
    throw std::invalid_argument("graph_search: budget_L must be positive");
  if (params.crc_terminate) {
    if (!params.crc) throw std::invalid_argument("graph_search: crc_terminate needs crc_config");
    if (params.crc->width + 1 > code.dimension)
      throw std::invalid_argument("graph_search: crc width must be <= k - 1");
  }

  DecodeResult result;
  VisitedSet visited;

  BitVec info(code.dimension);
  for (std::size_t i = 0; i < code.dimension; ++i) info.set(i, rng.next_u64() & 1);
  Codeword current = encode(code, info);
  visited.insert(current);

  result.codeword = current;
  result.metric = metric(current, y);
  result.termination = Termination::kMaxMoves;

  unsigned extra_breadth = params.extra_expansions == 0 ? 0 : params.extra_breadth;

  for (std::uint64_t move = 0; move < params.max_moves; ++move) {
    // budget is checked between moves; a move in progress completes
    if (result.counter.units(code.length) > params.budget_units) {
      result.termination = Termination::kBudgetExhausted;
      break;
    }
    StepOutcome step = next_step_greedy(code, y, current, visited, params.breadth,
                                        extra_breadth, result.counter);
    if (step.extra_children_used) {
      ++result.extra_expansions_used;
      if (result.extra_expansions_used >= params.extra_expansions) extra_breadth = 0;
    }
    if (!step.found) {
      result.termination = Termination::kNeighborsExhausted;
      break;
    }
    current = std::move(step.candidate);
    visited.insert(current);
    ++result.moves;
    if (step.metric > result.metric) {
      result.metric = step.metric;
      result.codeword = current;
      if (params.crc_terminate && crc_check(extract_info(code, current), *params.crc)) {
        result.termination = Termination::kCrcHit;
        break;
      }
    }
  }

  result.fht_units = result.counter.units(code.length);
  return result;
}

double fht_unit_cost(std::span<const std::size_t> lengths, std::size_t ref_len) {
  double sum = 0.0;
  for (std::size_t len : lengths) {
    if (len == 0 || !std::has_single_bit(len) || len > ref_len)
      throw std::invalid_argument("fht_unit_cost: lengths must be powers of two <= n");
    sum += static_cast<double>(len) / static_cast<double>(ref_len);
  }
  return sum;
}

}  // namespace gsd
