#include "gsd/transform.hpp"

#include <bit>
#include <stdexcept>

namespace gsd {

void fht(std::span<double> v, FhtCounter* counter) {
  const std::size_t n = v.size();
  if (n == 0 || !std::has_single_bit(n))
    throw std::invalid_argument("fht: length must be a power of two");
  if (counter) counter->record(static_cast<unsigned>(std::countr_zero(n)));

  for (std::size_t half = 1; half < n; half <<= 1) {
    for (std::size_t block = 0; block < n; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const double a = v[i];
        const double b = v[i + half];
        v[i] = a + b;
        v[i + half] = a - b;
      }
    }
  }
}

void child_heuristics_inplace(std::span<double> segment, std::span<double> out,
                              FhtCounter* counter) {
  const std::size_t len = segment.size();
  if (len < 2) throw std::invalid_argument("child_heuristics: segment length must be >= 2");
  if (out.size() != 2 * len - 2)
    throw std::invalid_argument("child_heuristics: output length must be 2*len-2");
  fht(segment, counter);
  const double total = segment[0];
  for (std::size_t t = 1; t < len; ++t) {
    out[t - 1] = 0.5 * (total - segment[t]);
    out[len - 1 + t - 1] = 0.5 * (total + segment[t]);
  }
}

std::vector<double> child_heuristics(std::span<const double> segment, FhtCounter* counter) {
  if (segment.size() < 2)
    throw std::invalid_argument("child_heuristics: segment length must be >= 2");
  std::vector<double> scratch(segment.begin(), segment.end());
  std::vector<double> out(2 * segment.size() - 2);
  child_heuristics_inplace(scratch, out, counter);
  return out;
}

}  // namespace gsd
