#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gsd {

// Tally of Hadamard transforms by length. Complexity budgets count a
// length-l transform as l/n of one reference-length transform, so one
// full-length FHT costs the same as two of half length.
struct FhtCounter {
  static constexpr unsigned kMaxLog2 = 17;
  std::array<std::uint64_t, kMaxLog2 + 1> calls{};  // calls[t] = transforms of length 2^t

  void record(unsigned log2_len) { ++calls[log2_len]; }

  std::uint64_t total_calls() const {
    std::uint64_t total = 0;
    for (auto c : calls) total += c;
    return total;
  }

  double units(std::size_t ref_len) const {
    double sum = 0.0;
    for (unsigned t = 0; t <= kMaxLog2; ++t)
      if (calls[t]) sum += static_cast<double>(calls[t]) * static_cast<double>(1ull << t);
    return sum / static_cast<double>(ref_len);
  }

  void merge(const FhtCounter& other) {
    for (unsigned t = 0; t <= kMaxLog2; ++t) calls[t] += other.calls[t];
  }
};

// In-place Walsh-Hadamard transform in Sylvester ordering: v <- v * H with
// H = [[1,1],[1,-1]] tensored log2(n) times. Length must be a power of two;
// a length-1 input is returned unchanged. fht(fht(v)) == n * v.
void fht(std::span<double> v, FhtCounter* counter = nullptr);

// Sums of `segment` over every half-weight first-order pattern, all obtained
// from a single FHT of the segment. Output order matches
// first_order_halfweight(log2(len)): entries [0, len-1) follow Sylvester
// columns 1..len-1 ((h[0]-h[t])/2), entries [len-1, 2*len-2) are their
// complements ((h[0]+h[t])/2). The segment buffer is transformed in place.
void child_heuristics_inplace(std::span<double> segment, std::span<double> out,
                              FhtCounter* counter = nullptr);

// Allocating convenience wrapper; returns 2*len-2 values.
std::vector<double> child_heuristics(std::span<const double> segment,
                                     FhtCounter* counter = nullptr);

}  // namespace gsd
