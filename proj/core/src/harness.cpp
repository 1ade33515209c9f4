#include "gsd/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace gsd {

namespace {

constexpr std::size_t kBatchSize = 256;  // fixed, so stopping is schedule-independent

// Two sums of n doubles that agree mathematically can still round apart;
// treat metrics within this band as tied.
bool metrics_tied(double a, double b) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= 1e-9 * scale;
}

}  // namespace

TrialClass classify_trial(const Codeword& transmitted, const Codeword& decoded,
                          double decoded_metric, double transmitted_metric) {
  TrialClass cls;
  cls.block_error = !(decoded == transmitted);
  if (!cls.block_error) return cls;
  cls.ml_tie = metrics_tied(decoded_metric, transmitted_metric);
  cls.ml_certified = cls.ml_tie || decoded_metric > transmitted_metric;
  return cls;
}

TrialRecord run_trial(const RmCode& code, const SweepPoint& point, std::uint64_t trial_index) {
  Rng rng(substream_seed(point.seed, trial_index));

  BitVec info(code.dimension);
  if (point.search.crc_terminate) {
    const CrcConfig& crc = *point.search.crc;
    BitVec payload(code.dimension - crc.width);
    for (std::size_t i = 0; i < payload.size(); ++i) payload.set(i, rng.next_u64() & 1);
    info = crc_append(payload, crc);
  } else {
    for (std::size_t i = 0; i < info.size(); ++i) info.set(i, rng.next_u64() & 1);
  }

  const Codeword transmitted = encode(code, info);
  const LlrVector y = transmit(transmitted, point.channel, rng);
  const DecodeResult result = graph_search(code, y, point.search, rng);

  const TrialClass cls = classify_trial(transmitted, result.codeword,
                                        metric(result.codeword, y),
                                        metric(transmitted, y));
  TrialRecord record;
  record.block_error = cls.block_error;
  record.ml_certified = cls.ml_certified;
  record.ml_tie = cls.ml_tie;
  record.fht_units = result.fht_units;
  record.moves = result.moves;
  record.termination = result.termination;
  return record;
}

PointStats run_point(const RmCode& code, const SweepPoint& point, unsigned workers,
                     std::ostream* trial_dump) {
  if (workers < 1) throw std::invalid_argument("run_point: workers must be >= 1");
  if (point.trials < 1) throw std::invalid_argument("run_point: trials must be >= 1");
  validate(point.channel);  // fail fast, not inside a worker thread
  const auto start_time = std::chrono::steady_clock::now();

  PointStats stats;
  double units_sum = 0.0;
  double moves_sum = 0.0;
  bool stopped = false;

  std::vector<TrialRecord> batch;
  for (std::uint64_t base = 0; base < point.trials && !stopped; base += kBatchSize) {
    const std::size_t batch_trials =
        static_cast<std::size_t>(std::min<std::uint64_t>(kBatchSize, point.trials - base));
    batch.assign(batch_trials, TrialRecord{});

    const unsigned active = static_cast<unsigned>(
        std::min<std::size_t>(workers, batch_trials));
    if (active <= 1) {
      for (std::size_t i = 0; i < batch_trials; ++i)
        batch[i] = run_trial(code, point, base + i);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(active);
      std::exception_ptr failure;
      std::mutex failure_mutex;
      for (unsigned w = 0; w < active; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < batch_trials; i += active)
              batch[i] = run_trial(code, point, base + i);
          } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      if (failure) std::rethrow_exception(failure);
    }

    // aggregate in trial order; a stop cut applies exactly as it would serially
    for (std::size_t i = 0; i < batch_trials; ++i) {
      const TrialRecord& rec = batch[i];
      ++stats.trials_run;
      stats.block_errors += rec.block_error;
      stats.ml_lb_errors += rec.ml_certified;
      stats.ml_lb_ties += rec.ml_tie;
      units_sum += rec.fht_units;
      moves_sum += rec.moves;
      ++stats.termination_counts[static_cast<unsigned>(rec.termination)];
      if (trial_dump) {
        *trial_dump << base + i << ',' << rec.block_error << ',' << rec.ml_certified << ','
                    << rec.ml_tie << ',' << rec.fht_units << ',' << rec.moves << ','
                    << to_string(rec.termination) << '\n';
      }
      if (point.stop_at_errors && stats.block_errors >= *point.stop_at_errors) {
        stopped = true;
        break;
      }
    }
  }

  stats.bler = static_cast<double>(stats.block_errors) / static_cast<double>(stats.trials_run);
  stats.ml_lb = static_cast<double>(stats.ml_lb_errors) / static_cast<double>(stats.trials_run);
  stats.avg_fht_units = units_sum / static_cast<double>(stats.trials_run);
  stats.avg_moves = moves_sum / static_cast<double>(stats.trials_run);
  stats.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
  return stats;
}

void write_csv_header(std::ostream& out) {
  out << "# gsd simulate csv v1\n";
  out << "r,m,channel,param,budget_L,l,lhat,s,crc,trials,errors,bler,ml_lb,"
         "avg_units,avg_moves,seed\n";
}

void write_csv_row(std::ostream& out, const SweepPoint& point, const PointStats& stats) {
  out << point.order << ',' << point.log_len << ','
      << (point.channel.kind == ChannelKind::kBsc ? "bsc" : "awgn") << ','
      << point.channel.parameter << ',' << point.search.budget_units << ','
      << point.search.breadth << ',' << point.search.extra_breadth << ','
      << point.search.extra_expansions << ',' << (point.search.crc_terminate ? 1 : 0) << ','
      << stats.trials_run << ',' << stats.block_errors << ',' << stats.bler << ','
      << stats.ml_lb << ',' << stats.avg_fht_units << ',' << stats.avg_moves << ','
      << point.seed << '\n';
}

void write_trial_dump_header(std::ostream& out) {
  out << "trial,block_error,ml_certified,ml_tie,fht_units,moves,termination\n";
}

}  // namespace gsd
