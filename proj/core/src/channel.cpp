#include "gsd/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace gsd {

void validate(const ChannelSpec& spec) {
  if (spec.kind == ChannelKind::kBsc) {
    if (!(spec.parameter > 0.0 && spec.parameter < 0.5))
      throw std::invalid_argument("channel: crossover p must lie in (0, 0.5)");
  } else {
    if (!(spec.rate > 0.0 && spec.rate <= 1.0))
      throw std::invalid_argument("channel: rate must lie in (0, 1]");
    if (!std::isfinite(spec.parameter))
      throw std::invalid_argument("channel: ebn0_db must be finite");
  }
}

double hard_llr_magnitude(double p) {
  if (!(p > 0.0 && p < 0.5))
    throw std::invalid_argument("channel: crossover p must lie in (0, 0.5)");
  return std::log((1.0 - p) / p);
}

double awgn_noise_variance(double ebn0_db, double rate) {
  if (!(rate > 0.0 && rate <= 1.0))
    throw std::invalid_argument("channel: rate must lie in (0, 1]");
  return 1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
}

LlrVector transmit(const BitVec& codeword, const ChannelSpec& spec, Rng& rng) {
  const std::size_t n = codeword.size();
  LlrVector llr(n);
  switch (spec.kind) {
    case ChannelKind::kBsc: {
      const double magnitude = hard_llr_magnitude(spec.parameter);
      for (std::size_t i = 0; i < n; ++i) {
        const bool received = codeword.get(i) ^ rng.bernoulli(spec.parameter);
        llr[i] = received ? -magnitude : magnitude;
      }
      break;
    }
    case ChannelKind::kBiAwgn: {
      const double variance = awgn_noise_variance(spec.parameter, spec.rate);
      const double sigma = std::sqrt(variance);
      for (std::size_t i = 0; i < n; ++i) {
        const double x = codeword.get(i) ? -1.0 : 1.0;
        const double y = x + sigma * rng.gaussian();
        llr[i] = 2.0 * y / variance;
      }
      break;
    }
  }
  return llr;
}

}  // namespace gsd
