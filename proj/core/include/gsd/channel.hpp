#pragma once

#include <vector>

#include "gsd/bitvec.hpp"
#include "gsd/rng.hpp"

namespace gsd {

// Log-likelihood ratios log P(obs | bit=0) - log P(obs | bit=1); a positive
// entry favors bit 0.
using LlrVector = std::vector<double>;

enum class ChannelKind { kBsc, kBiAwgn };

struct ChannelSpec {
  ChannelKind kind = ChannelKind::kBiAwgn;
  double parameter = 0.0;  // crossover p for BSC, Eb/N0 in dB for BI-AWGN
  double rate = 0.5;       // information rate in the Eb/N0 -> sigma conversion
};

// throws std::invalid_argument when the parameter or rate is out of range
void validate(const ChannelSpec& spec);

// ln((1-p)/p), the LLR magnitude of a BSC observation. Requires 0 < p < 0.5.
double hard_llr_magnitude(double p);

// sigma^2 = 1 / (2 * rate * 10^{ebn0_db / 10}) for BPSK x = 1 - 2c.
double awgn_noise_variance(double ebn0_db, double rate);

// BSC: flips each bit with probability p, LLR_i = (1 - 2 z_i) ln((1-p)/p).
// BI-AWGN: y_i = (1 - 2 c_i) + n_i with n_i ~ N(0, sigma^2), LLR_i = 2 y_i / sigma^2.
LlrVector transmit(const BitVec& codeword, const ChannelSpec& spec, Rng& rng);

}  // namespace gsd
