#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "gsd/harness.hpp"
#include "gsd/oracle.hpp"

using namespace gsd;

namespace {

SweepPoint awgn_point(unsigned r, unsigned m, double ebn0_db, double rate) {
  SweepPoint point;
  point.order = r;
  point.log_len = m;
  point.channel = ChannelSpec{ChannelKind::kBiAwgn, ebn0_db, rate};
  return point;
}

}  // namespace

TEST_CASE("classify_trial rule") {
  const Codeword truth = BitVec::from_string("0101");
  const Codeword other = BitVec::from_string("0110");

  auto correct = classify_trial(truth, truth, 3.0, 10.0);
  CHECK(!correct.block_error);
  CHECK(!correct.ml_certified);

  auto beaten = classify_trial(truth, other, 12.0, 10.0);
  CHECK(beaten.block_error);
  CHECK(beaten.ml_certified);
  CHECK(!beaten.ml_tie);

  auto tied = classify_trial(truth, other, 10.0, 10.0);
  CHECK(tied.block_error);
  CHECK(tied.ml_certified);
  CHECK(tied.ml_tie);

  auto lost = classify_trial(truth, other, 8.0, 10.0);
  CHECK(lost.block_error);
  CHECK(!lost.ml_certified);
}

TEST_CASE("noiseless trials decode cleanly with no ML event") {
  const RmCode code = make_code(2, 4);
  SweepPoint point = awgn_point(2, 4, 40.0, 11.0 / 16.0);
  point.seed = 5;
  point.search.budget_units = 64.0;
  point.search.max_moves = 64;
  for (std::uint64_t t = 0; t < 20; ++t) {
    const auto rec = run_trial(code, point, t);
    CHECK(!rec.block_error);
    CHECK(!rec.ml_certified);
  }
}

TEST_CASE("CRC termination fires on the clean channel") {
  const RmCode code = make_code(2, 6);  // k = 22 leaves room for CRC-16
  SweepPoint point = awgn_point(2, 6, 40.0, 22.0 / 64.0);
  point.seed = 9;
  point.search.crc_terminate = true;
  point.search.crc = default_crc16();
  point.search.budget_units = 256.0;
  point.search.max_moves = 256;
  int hits = 0;
  for (std::uint64_t t = 0; t < 10; ++t) {
    const auto rec = run_trial(code, point, t);
    CHECK(!rec.block_error);
    if (rec.termination == Termination::kCrcHit) ++hits;
  }
  CHECK(hits == 10);
}

TEST_CASE("run_point is independent of the worker count") {
  const RmCode code = make_code(2, 4);
  SweepPoint point = awgn_point(2, 4, 1.0, 11.0 / 16.0);
  point.trials = 400;
  point.seed = 31;
  point.search.budget_units = 32.0;
  point.search.max_moves = 32;

  const auto serial = run_point(code, point, 1);
  const auto parallel = run_point(code, point, 4);
  CHECK(serial.trials_run == parallel.trials_run);
  CHECK(serial.block_errors == parallel.block_errors);
  CHECK(serial.ml_lb_errors == parallel.ml_lb_errors);
  CHECK(serial.ml_lb_ties == parallel.ml_lb_ties);
  CHECK(serial.avg_fht_units == parallel.avg_fht_units);
  CHECK(serial.avg_moves == parallel.avg_moves);
  CHECK(serial.termination_counts == parallel.termination_counts);
  CHECK(serial.ml_lb_errors <= serial.block_errors);
  CHECK(serial.bler == doctest::Approx(static_cast<double>(serial.block_errors) /
                                       serial.trials_run));
}

TEST_CASE("stop_at_errors cuts the run on the serial trial order") {
  const RmCode code = make_code(2, 4);
  SweepPoint point = awgn_point(2, 4, -2.0, 11.0 / 16.0);  // heavy noise
  point.trials = 2000;
  point.seed = 3;
  point.search.budget_units = 16.0;
  point.search.max_moves = 16;
  point.stop_at_errors = 25;

  const auto stats = run_point(code, point, 2);
  CHECK(stats.trials_run <= 2000);
  CHECK(stats.block_errors == 25);
  // identical to a serial run with the same stopping rule
  const auto serial = run_point(code, point, 1);
  CHECK(stats.trials_run == serial.trials_run);
  CHECK(stats.block_errors == serial.block_errors);
}

TEST_CASE("per-trial records stream in trial order") {
  const RmCode code = make_code(1, 3);
  SweepPoint point = awgn_point(1, 3, 0.0, 4.0 / 8.0);
  point.trials = 10;
  point.seed = 1;
  std::ostringstream dump;
  write_trial_dump_header(dump);
  run_point(code, point, 2, &dump);
  std::istringstream lines(dump.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "trial,block_error,ml_certified,ml_tie,fht_units,moves,termination");
  int expect = 0;
  while (std::getline(lines, line)) {
    CHECK(line.rfind(std::to_string(expect) + ",", 0) == 0);
    ++expect;
  }
  CHECK(expect == 10);
}

TEST_CASE("csv schema") {
  std::ostringstream out;
  write_csv_header(out);
  const RmCode code = make_code(1, 3);
  SweepPoint point = awgn_point(1, 3, 0.0, 0.5);
  point.trials = 5;
  const auto stats = run_point(code, point, 1);
  write_csv_row(out, point, stats);

  std::istringstream lines(out.str());
  std::string version, header, row;
  std::getline(lines, version);
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(version == "# gsd simulate csv v1");
  CHECK(header ==
        "r,m,channel,param,budget_L,l,lhat,s,crc,trials,errors,bler,ml_lb,"
        "avg_units,avg_moves,seed");
  CHECK(std::count(row.begin(), row.end(), ',') == 15);
}

TEST_CASE("avg units stay within budget plus one move") {
  const RmCode code = make_code(3, 5);
  SweepPoint point = awgn_point(3, 5, 0.0, 26.0 / 32.0);
  point.trials = 50;
  point.seed = 77;
  point.search.budget_units = 4.0;
  point.search.max_moves = 64;
  const auto stats = run_point(code, point, 2);
  const double worst_move = 1.0 + 16.0 * 0.75;
  CHECK(stats.avg_fht_units <= point.search.budget_units + worst_move);
  CHECK(stats.ml_lb <= stats.bler);
}
