#include "gsd/oracle.hpp"

#include <bit>
#include <deque>
#include <stdexcept>

#include "gsd/decoder.hpp"

namespace gsd {

namespace {

void require_enumerable(const RmCode& code, unsigned cap, const char* who) {
  if (code.dimension > cap)
    throw std::invalid_argument(std::string(who) + ": code dimension k exceeds the cap");
}

// metric delta of flipping `pattern` on top of `current`:
// M(current ^ pattern) - M(current) = -2 sum_{i in pattern} (1 - 2 current_i) y_i
double flip_delta(const Codeword& current, const Codeword& pattern,
                  std::span<const double> y) {
  double sum = 0.0;
  const auto words = pattern.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits) {
      const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      sum += current.get(i) ? -y[i] : y[i];
    }
  }
  return -2.0 * sum;
}

std::uint32_t info_index(const RmCode& code, const Codeword& c) {
  const BitVec info = extract_info(code, c);
  return static_cast<std::uint32_t>(info.words()[0]);
}

}  // namespace

OracleDecode ml_decode_bruteforce(const RmCode& code, std::span<const double> y) {
  require_enumerable(code, kMaxEnumerationDim, "ml_decode_bruteforce");
  if (y.size() != code.length)
    throw std::invalid_argument("ml_decode_bruteforce: length mismatch");

  // Gray-code sweep: candidate i differs from its predecessor by one
  // generator row, so the metric updates in O(weight) per step. The running
  // metric is only used for selection; the winner is re-scored from scratch.
  Codeword current(code.length);
  double running = metric(current, y);
  Codeword best = current;
  double best_metric = running;

  const std::uint64_t count = std::uint64_t{1} << code.dimension;
  for (std::uint64_t i = 1; i < count; ++i) {
    const unsigned row = static_cast<unsigned>(std::countr_zero(i));
    running += flip_delta(current, code.generator[row], y);
    current.xor_with(code.generator[row]);
    if (running > best_metric ||
        (running == best_metric && lex_less(current, best))) {
      best_metric = running;
      best = current;
    }
  }
  return OracleDecode{best, metric(best, y)};
}

TraversalDecode graph_traversal_decode(const RmCode& code, std::span<const double> y,
                                       Rng& rng) {
  require_enumerable(code, kMaxEnumerationDim, "graph_traversal_decode");
  if (y.size() != code.length)
    throw std::invalid_argument("graph_traversal_decode: length mismatch");

  // edges = XOR with any minimum-weight codeword
  std::vector<Codeword> edges;
  MinWeightEnumerator enumerator(code, /*dedup=*/true);
  while (auto coords = enumerator.next())
    edges.push_back(coords_to_bits(*coords, code.length));

  BitVec info(code.dimension);
  for (std::size_t i = 0; i < code.dimension; ++i) info.set(i, rng.next_u64() & 1);
  Codeword start = encode(code, info);

  std::vector<bool> visited(std::size_t{1} << code.dimension, false);
  std::deque<Codeword> queue;
  visited[info_index(code, start)] = true;
  queue.push_back(start);

  Codeword best = start;
  double best_metric = metric(start, y);
  std::uint64_t nodes = 0;

  while (!queue.empty()) {
    Codeword node = std::move(queue.front());
    queue.pop_front();
    ++nodes;
    const double node_metric = metric(node, y);
    if (node_metric > best_metric ||
        (node_metric == best_metric && lex_less(node, best))) {
      best_metric = node_metric;
      best = node;
    }
    for (const Codeword& edge : edges) {
      Codeword neighbor = node;
      neighbor.xor_with(edge);
      const std::uint32_t idx = info_index(code, neighbor);
      if (!visited[idx]) {
        visited[idx] = true;
        queue.push_back(std::move(neighbor));
      }
    }
  }
  return TraversalDecode{best, best_metric, nodes};
}

std::vector<Codeword> min_weight_bruteforce(const RmCode& code) {
  const std::size_t target = code.min_distance();
  std::vector<Codeword> found;

  if (code.length <= 64) {
    // single-word sweep; affordable up to k = 32
    require_enumerable(code, 32, "min_weight_bruteforce");
    std::vector<std::uint64_t> rows(code.dimension);
    for (std::size_t i = 0; i < code.dimension; ++i) rows[i] = code.generator[i].words()[0];
    std::uint64_t current = 0;
    const std::uint64_t count = std::uint64_t{1} << code.dimension;
    for (std::uint64_t i = 1; i < count; ++i) {
      current ^= rows[std::countr_zero(i)];
      if (static_cast<std::size_t>(std::popcount(current)) == target) {
        Codeword w(code.length);
        w.words()[0] = current;
        found.push_back(std::move(w));
      }
    }
    return found;
  }

  require_enumerable(code, kMaxEnumerationDim, "min_weight_bruteforce");
  Codeword current(code.length);
  const std::uint64_t count = std::uint64_t{1} << code.dimension;
  for (std::uint64_t i = 1; i < count; ++i) {
    current.xor_with(code.generator[std::countr_zero(i)]);
    if (current.popcount() == target) found.push_back(current);
  }
  return found;
}

}  // namespace gsd
