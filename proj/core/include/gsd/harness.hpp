#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>

#include "gsd/channel.hpp"
#include "gsd/decoder.hpp"
#include "gsd/rm_code.hpp"

namespace gsd {

struct SweepPoint {
  unsigned order = 0;    // r
  unsigned log_len = 0;  // m
  ChannelSpec channel;
  SearchParams search;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  // stop after this many block errors; checked on the serialized trial
  // order, so results stay independent of the worker count
  std::optional<std::uint64_t> stop_at_errors;
};

struct TrialRecord {
  bool block_error = false;
  bool ml_certified = false;  // wrong output scoring at least the transmitted codeword
  bool ml_tie = false;        // the certificate came from an exact metric tie
  double fht_units = 0.0;
  std::uint64_t moves = 0;
  Termination termination = Termination::kMaxMoves;
};

struct PointStats {
  std::uint64_t trials_run = 0;
  std::uint64_t block_errors = 0;
  std::uint64_t ml_lb_errors = 0;
  std::uint64_t ml_lb_ties = 0;
  double bler = 0.0;
  double ml_lb = 0.0;
  double avg_fht_units = 0.0;
  double avg_moves = 0.0;
  std::array<std::uint64_t, 4> termination_counts{};  // indexed by Termination
  double wall_time_s = 0.0;
};

struct TrialClass {
  bool block_error = false;
  bool ml_certified = false;
  bool ml_tie = false;
};

// Block error iff decoded != transmitted. A wrong output whose metric is at
// least the transmitted codeword's certifies that an ML decoder errs too;
// an exact tie counts as an ML error (adversarial tie-breaking) and is also
// flagged separately so the optimistic variant can be recomputed.
TrialClass classify_trial(const Codeword& transmitted, const Codeword& decoded,
                          double decoded_metric, double transmitted_metric);

// One Monte-Carlo trial: draw a payload, optionally attach the CRC, encode,
// transmit, decode, classify. All randomness comes from the trial substream,
// in the order payload bits, channel noise, decoder start.
TrialRecord run_trial(const RmCode& code, const SweepPoint& point, std::uint64_t trial_index);

// Runs the point's trials across `workers` threads in fixed batches,
// aggregating in trial order. With stop_at_errors set, stats cover exactly
// the prefix of trials up to and including the stopping error, matching a
// serial run. `trial_dump` receives one CSV line per aggregated trial.
PointStats run_point(const RmCode& code, const SweepPoint& point, unsigned workers,
                     std::ostream* trial_dump = nullptr);

// CSV schema, fixed; the version comment precedes the column header.
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const SweepPoint& point, const PointStats& stats);
void write_trial_dump_header(std::ostream& out);

}  // namespace gsd
