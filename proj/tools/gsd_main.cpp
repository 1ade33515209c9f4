// gsd: Reed-Muller local-graph-search decoding and Monte-Carlo simulation.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gsd/channel.hpp"
#include "gsd/crc.hpp"
#include "gsd/decoder.hpp"
#include "gsd/harness.hpp"
#include "gsd/oracle.hpp"
#include "gsd/rm_code.hpp"
#include "gsd/transform.hpp"

namespace {

using json = nlohmann::json;

unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Flat key=value config: tokens split on whitespace, '#' starts a comment.
// Multiple pairs per line are allowed (channel=bsc p=0.19).
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open file " + path);
  std::map<std::string, std::string> values;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos || eq == 0)
        throw std::invalid_argument("config: malformed token '" + token +
                                    "' (expected key=value)");
      values[token.substr(0, eq)] = token.substr(eq + 1);
    }
  }
  return values;
}

std::vector<double> parse_list(const std::string& text, const std::string& field) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument(field + ": cannot parse value '" + item + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument(field + ": empty value list");
  return out;
}

std::uint32_t parse_hex(const std::string& text, const std::string& field) {
  try {
    return static_cast<std::uint32_t>(std::stoul(text, nullptr, 0));
  } catch (const std::exception&) {
    throw std::invalid_argument(field + ": cannot parse '" + text + "'");
  }
}

std::vector<double> read_llr_file(const std::string& path, std::size_t expected) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("llr_file: cannot open " + path);
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      values.push_back(std::stod(line));
    } catch (const std::exception&) {
      throw std::invalid_argument("llr_file: line " + std::to_string(line_no) +
                                  " is not a real number");
    }
  }
  if (values.size() != expected)
    throw std::invalid_argument("llr_file: got " + std::to_string(values.size()) +
                                " values, expected " + std::to_string(expected));
  return values;
}

// All knobs of one simulate invocation, before sweep expansion.
struct SimulateOptions {
  unsigned r = 0, m = 0;
  std::string channel = "awgn";
  std::vector<double> p_list;
  std::vector<double> ebn0_list;
  std::optional<double> rate;
  std::vector<double> budget_list{1024.0};
  std::optional<std::uint64_t> moves;
  unsigned l = 8, lhat = 8, s = 5;
  bool crc = false;
  unsigned crc_width = 16;
  std::uint32_t crc_poly = 0x1021;
  std::uint32_t crc_init = 0xFFFF;
  bool crc_reflect = false;
  std::uint32_t crc_xorout = 0;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::uint64_t stop_at_errors = 100;  // 0 disables
  unsigned workers = default_workers();
  std::string csv_path, json_path, dump_path;
};

std::string channel_name(const gsd::ChannelSpec& spec) {
  return spec.kind == gsd::ChannelKind::kBsc ? "bsc" : "awgn";
}

// shortest representation that parses back to the same double, so a rerun
// from the echoed config is bit-identical
std::string round_trip(double value) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

std::string hex_string(std::uint32_t v) {
  std::ostringstream out;
  out << "0x" << std::hex << std::uppercase << v;
  return out.str();
}

std::string effective_config(const gsd::SweepPoint& point, unsigned workers) {
  std::ostringstream out;
  out << "r=" << point.order << " m=" << point.log_len
      << " channel=" << channel_name(point.channel);
  if (point.channel.kind == gsd::ChannelKind::kBsc)
    out << " p=" << round_trip(point.channel.parameter);
  else
    out << " ebn0_db=" << round_trip(point.channel.parameter);
  out << " rate=" << round_trip(point.channel.rate)
      << " budget=" << round_trip(point.search.budget_units)
      << " moves=" << point.search.max_moves << " l=" << point.search.breadth
      << " lhat=" << point.search.extra_breadth << " s=" << point.search.extra_expansions
      << " crc=" << (point.search.crc_terminate ? 1 : 0);
  if (point.search.crc_terminate) {
    const auto& crc = *point.search.crc;
    out << " crc_width=" << crc.width << " crc_poly=" << hex_string(crc.polynomial)
        << " crc_init=" << hex_string(crc.init) << " crc_reflect=" << (crc.reflect ? 1 : 0)
        << " crc_xorout=" << hex_string(crc.xorout);
  }
  out << " trials=" << point.trials << " seed=" << point.seed;
  out << " stop_at_errors=" << (point.stop_at_errors ? *point.stop_at_errors : 0);
  out << " workers=" << workers;
  return out.str();
}

json point_to_json(const gsd::SweepPoint& point, const gsd::PointStats& stats,
                   unsigned workers) {
  json config{{"r", point.order},
              {"m", point.log_len},
              {"channel", channel_name(point.channel)},
              {"param", point.channel.parameter},
              {"rate", point.channel.rate},
              {"budget", point.search.budget_units},
              {"moves", point.search.max_moves},
              {"l", point.search.breadth},
              {"lhat", point.search.extra_breadth},
              {"s", point.search.extra_expansions},
              {"crc", point.search.crc_terminate},
              {"trials", point.trials},
              {"seed", point.seed},
              {"stop_at_errors", point.stop_at_errors ? *point.stop_at_errors : 0},
              {"workers", workers}};
  if (point.search.crc_terminate) {
    const auto& crc = *point.search.crc;
    config["crc_config"] = {{"width", crc.width},
                            {"poly", hex_string(crc.polynomial)},
                            {"init", hex_string(crc.init)},
                            {"reflect", crc.reflect},
                            {"xorout", hex_string(crc.xorout)}};
  }
  json result{{"trials_run", stats.trials_run},
              {"block_errors", stats.block_errors},
              {"bler", stats.bler},
              {"ml_lb_errors", stats.ml_lb_errors},
              {"ml_lb_ties", stats.ml_lb_ties},
              {"ml_lb", stats.ml_lb},
              {"avg_fht_units", stats.avg_fht_units},
              {"avg_moves", stats.avg_moves},
              {"wall_time_s", stats.wall_time_s},
              {"terminations",
               {{"budget_exhausted", stats.termination_counts[0]},
                {"max_moves", stats.termination_counts[1]},
                {"neighbors_exhausted", stats.termination_counts[2]},
                {"crc_hit", stats.termination_counts[3]}}}};
  return json{{"config", config}, {"result", result}};
}

int run_simulate(const SimulateOptions& opt) {
  if (opt.channel != "bsc" && opt.channel != "awgn")
    throw std::invalid_argument("channel: must be 'bsc' or 'awgn'");
  const bool bsc = opt.channel == "bsc";
  if (bsc && opt.p_list.empty()) throw std::invalid_argument("p: required for channel=bsc");
  if (!bsc && opt.ebn0_list.empty())
    throw std::invalid_argument("ebn0_db: required for channel=awgn");

  const gsd::RmCode code = gsd::make_code(opt.r, opt.m);
  const double rate = opt.rate.value_or(static_cast<double>(code.dimension) /
                                        static_cast<double>(code.length));

  std::ofstream csv_file;
  std::ostream* csv = &std::cout;
  if (!opt.csv_path.empty()) {
    csv_file.open(opt.csv_path);
    if (!csv_file) throw std::invalid_argument("csv: cannot open " + opt.csv_path);
    csv = &csv_file;
  }
  std::ofstream dump_file;
  std::ostream* dump = nullptr;
  if (!opt.dump_path.empty()) {
    dump_file.open(opt.dump_path);
    if (!dump_file) throw std::invalid_argument("dump_trials: cannot open " + opt.dump_path);
    gsd::write_trial_dump_header(dump_file);
    dump = &dump_file;
  }

  gsd::write_csv_header(*csv);
  json summary;
  summary["generator"] = {{"name", gsd::Rng::kName},
                          {"substream", "seed xor trial_index * 0x9E3779B97F4A7C15"}};
  summary["points"] = json::array();

  const auto& params = bsc ? opt.p_list : opt.ebn0_list;
  for (double budget : opt.budget_list) {
    for (double param : params) {
      gsd::SweepPoint point;
      point.order = opt.r;
      point.log_len = opt.m;
      point.channel.kind = bsc ? gsd::ChannelKind::kBsc : gsd::ChannelKind::kBiAwgn;
      point.channel.parameter = param;
      point.channel.rate = rate;
      point.search.budget_units = budget;
      point.search.max_moves =
          opt.moves.value_or(static_cast<std::uint64_t>(std::ceil(budget)));
      point.search.breadth = opt.l;
      point.search.extra_breadth = opt.lhat;
      point.search.extra_expansions = opt.s;
      if (opt.crc) {
        point.search.crc_terminate = true;
        point.search.crc =
            gsd::CrcConfig{opt.crc_width, opt.crc_poly, opt.crc_init, opt.crc_reflect,
                           opt.crc_xorout};
      }
      point.trials = opt.trials;
      point.seed = opt.seed;
      if (opt.stop_at_errors > 0) point.stop_at_errors = opt.stop_at_errors;

      *csv << "# config: " << effective_config(point, opt.workers) << '\n';
      const gsd::PointStats stats = gsd::run_point(code, point, opt.workers, dump);
      gsd::write_csv_row(*csv, point, stats);
      csv->flush();
      summary["points"].push_back(point_to_json(point, stats, opt.workers));
    }
  }

  if (!opt.json_path.empty()) {
    std::ofstream json_file(opt.json_path);
    if (!json_file) throw std::invalid_argument("json: cannot open " + opt.json_path);
    json_file << summary.dump(2) << '\n';
  }
  return 0;
}

int run_decode(unsigned r, unsigned m, const std::string& llr_path, double budget,
               std::optional<std::uint64_t> moves, unsigned l, unsigned lhat, unsigned s,
               std::uint64_t seed, bool crc, const gsd::CrcConfig& crc_cfg) {
  const gsd::RmCode code = gsd::make_code(r, m);
  const auto y = read_llr_file(llr_path, code.length);
  gsd::SearchParams params;
  params.budget_units = budget;
  params.max_moves = moves.value_or(static_cast<std::uint64_t>(std::ceil(budget)));
  params.breadth = l;
  params.extra_breadth = lhat;
  params.extra_expansions = s;
  if (crc) {
    params.crc_terminate = true;
    params.crc = crc_cfg;
  }
  std::cout << "# config: mode=decode r=" << r << " m=" << m << " llr_file=" << llr_path
            << " budget=" << params.budget_units << " moves=" << params.max_moves
            << " l=" << l << " lhat=" << lhat << " s=" << s << " crc=" << (crc ? 1 : 0)
            << " seed=" << seed << '\n';
  gsd::Rng rng(seed);
  const gsd::DecodeResult result = gsd::graph_search(code, y, params, rng);
  std::cout << "codeword: " << result.codeword.to_string() << '\n'
            << "info: " << gsd::extract_info(code, result.codeword).to_string() << '\n'
            << "metric: " << result.metric << '\n'
            << "fht_units: " << result.fht_units << '\n'
            << "moves: " << result.moves << '\n'
            << "termination: " << gsd::to_string(result.termination) << '\n';
  return 0;
}

int run_enumerate(unsigned r, unsigned m, bool dedup, bool count_only, bool formula,
                  std::uint64_t limit) {
  const gsd::RmCode code = gsd::make_code(r, m);
  std::cout << "# config: mode=enumerate-minweight r=" << r << " m=" << m
            << " dedup=" << dedup << " count_only=" << count_only << " formula=" << formula
            << '\n';
  if (formula) {
    std::cout << gsd::to_decimal_string(gsd::min_weight_count(code)) << '\n';
    return 0;
  }
  gsd::MinWeightEnumerator enumerator(code, dedup);
  std::uint64_t count = 0;
  while (auto coords = enumerator.next()) {
    ++count;
    if (!count_only) {
      for (std::size_t i = 0; i < coords->size(); ++i)
        std::cout << (i ? " " : "") << (*coords)[i];
      std::cout << '\n';
    }
    if (limit && count >= limit) break;
  }
  if (count_only) std::cout << count << '\n';
  return 0;
}

int run_ml_bound(unsigned r, unsigned m, const std::string& llr_path, bool traversal,
                 std::uint64_t seed) {
  const gsd::RmCode code = gsd::make_code(r, m);
  const auto y = read_llr_file(llr_path, code.length);
  std::cout << "# config: mode=ml-bound r=" << r << " m=" << m << " llr_file=" << llr_path
            << " traversal=" << traversal << " seed=" << seed << '\n';
  if (traversal) {
    gsd::Rng rng(seed);
    const auto out = gsd::graph_traversal_decode(code, y, rng);
    std::cout << "codeword: " << out.codeword.to_string() << '\n'
              << "metric: " << out.metric << '\n'
              << "nodes_visited: " << out.nodes_visited << '\n';
  } else {
    const auto out = gsd::ml_decode_bruteforce(code, y);
    std::cout << "codeword: " << out.codeword.to_string() << '\n'
              << "metric: " << out.metric << '\n';
  }
  return 0;
}

// ---- selftest: quick invariant suite with self-contained references ----

bool report(const char* name, bool ok) {
  std::cout << (ok ? "ok" : "FAIL") << ": " << name << '\n';
  return ok;
}

bool selftest_fht() {
  gsd::Rng rng(1);
  for (std::size_t n = 2; n <= 256; n <<= 1) {
    std::vector<double> v(n);
    for (auto& x : v) x = rng.gaussian();
    std::vector<double> direct(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        direct[i] += v[j] * ((std::popcount(i & j) & 1) ? -1.0 : 1.0);
    gsd::fht(v);
    for (std::size_t i = 0; i < n; ++i)
      if (std::fabs(v[i] - direct[i]) > 1e-9) return false;
  }
  return true;
}

bool selftest_child_sums() {
  gsd::Rng rng(2);
  std::vector<double> seg(64);
  for (auto& x : seg) x = rng.gaussian();
  const auto fast = gsd::child_heuristics(seg);
  const auto patterns = gsd::first_order_halfweight(6);
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < seg.size(); ++j)
      if (patterns[i].get(j)) sum += seg[j];
    if (std::fabs(fast[i] - sum) > 1e-9) return false;
  }
  return true;
}

bool selftest_tree() {
  const gsd::RmCode code = gsd::make_code(2, 3);
  std::uint64_t count = 0;
  gsd::MinWeightEnumerator enumerator(code, true);
  std::vector<gsd::BitVec> supports;
  while (auto coords = enumerator.next()) {
    ++count;
    supports.push_back(gsd::coords_to_bits(*coords, code.length));
  }
  if (count != 28 || gsd::min_weight_count(code) != 28) return false;
  auto brute = gsd::min_weight_bruteforce(code);
  if (brute.size() != 28) return false;
  for (const auto& w : brute)
    if (std::find(supports.begin(), supports.end(), w) == supports.end()) return false;
  return gsd::gf2_rank(supports) == code.dimension;
}

bool selftest_traversal() {
  const gsd::RmCode code = gsd::make_code(2, 4);
  gsd::Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> y(code.length);
    for (auto& x : y) x = rng.gaussian();
    gsd::Rng start(trial);
    const auto walk = gsd::graph_traversal_decode(code, y, start);
    const auto exact = gsd::ml_decode_bruteforce(code, y);
    if (std::fabs(walk.metric - exact.metric) > 1e-9) return false;
    if (walk.nodes_visited != std::uint64_t{1} << code.dimension) return false;
  }
  return true;
}

bool selftest_crc() {
  gsd::BitVec payload(72);
  const char* digits = "123456789";
  for (int b = 0; b < 9; ++b)
    for (int i = 0; i < 8; ++i)
      payload.set(b * 8 + i, (digits[b] >> (7 - i)) & 1);
  if (gsd::crc_bits(payload, gsd::default_crc16()) != 0x29B1) return false;
  return gsd::crc_check(gsd::crc_append(payload, gsd::default_crc16()),
                        gsd::default_crc16());
}

bool selftest_determinism() {
  const gsd::RmCode code = gsd::make_code(2, 4);
  gsd::SweepPoint point;
  point.order = 2;
  point.log_len = 4;
  point.channel = {gsd::ChannelKind::kBiAwgn, 1.0, 11.0 / 16.0};
  point.trials = 100;
  point.seed = 7;
  point.search.budget_units = 16.0;
  point.search.max_moves = 16;
  const auto a = gsd::run_point(code, point, 1);
  const auto b = gsd::run_point(code, point, 2);
  return a.block_errors == b.block_errors && a.ml_lb_errors == b.ml_lb_errors &&
         a.avg_fht_units == b.avg_fht_units && a.trials_run == b.trials_run;
}

bool selftest_metric_delta() {
  gsd::Rng rng(4);
  const std::size_t n = 32;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> y(n);
    for (auto& x : y) x = rng.gaussian();
    gsd::BitVec c(n), e(n);
    for (std::size_t i = 0; i < n; ++i) {
      c.set(i, rng.next_u64() & 1);
      e.set(i, rng.next_u64() & 1);
    }
    gsd::BitVec f = c;
    f.xor_with(e);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (e.get(i)) sum += c.get(i) ? -y[i] : y[i];
    if (std::fabs(gsd::metric(c, y) - gsd::metric(f, y) - 2.0 * sum) > 1e-9) return false;
  }
  return true;
}

int run_selftest() {
  bool ok = true;
  ok &= report("fht matches the direct transform", selftest_fht());
  ok &= report("child heuristics match support sums", selftest_child_sums());
  ok &= report("minimum-weight tree matches brute force on R(2,3)", selftest_tree());
  ok &= report("graph traversal equals exhaustive ML on R(2,4)", selftest_traversal());
  ok &= report("crc check value and round trip", selftest_crc());
  ok &= report("serial and parallel runs agree", selftest_determinism());
  ok &= report("metric delta identity", selftest_metric_delta());
  return ok ? 0 : 1;
}

// applies config-file values to options the command line left untouched
template <typename T>
void apply_config(const CLI::App* cmd, const std::map<std::string, std::string>& file,
                  const std::string& flag, const std::string& key, T& value) {
  const auto it = file.find(key);
  if (it == file.end()) return;
  if (cmd->count("--" + flag) > 0) return;  // flags override file values
  std::istringstream in(it->second);
  in >> value;
  if (in.fail()) throw std::invalid_argument(key + ": cannot parse '" + it->second + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reed-Muller local graph search decoder and simulation harness"};
  app.require_subcommand(1);

  // ---- simulate ----
  SimulateOptions sim;
  std::string config_path;
  std::string p_text, ebn0_text, budget_text = "1024";
  double rate_flag = -1.0;
  std::int64_t moves_flag = -1;
  std::string crc_poly_text = "0x1021", crc_init_text = "0xFFFF", crc_xorout_text = "0x0";

  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo BLER / complexity sweep");
  simulate->add_option("--config", config_path, "key=value sweep file");
  simulate->add_option("--r", sim.r, "code order r");
  simulate->add_option("--m", sim.m, "code log-length m");
  simulate->add_option("--channel", sim.channel, "bsc or awgn");
  simulate->add_option("--p", p_text, "BSC crossover probability (comma list sweeps)");
  simulate->add_option("--ebn0-db", ebn0_text, "AWGN Eb/N0 in dB (comma list sweeps)");
  simulate->add_option("--rate", rate_flag, "rate for the Eb/N0 conversion (default k/n)");
  simulate->add_option("--budget", budget_text, "FHT-unit budget L (comma list sweeps)");
  simulate->add_option("--moves", moves_flag, "max moves N (default ceil(budget))");
  simulate->add_option("--l", sim.l, "search breadth l");
  simulate->add_option("--lhat", sim.lhat, "extra breadth l-hat");
  simulate->add_option("--s", sim.s, "extra-expansion budget s");
  simulate->add_flag("--crc", sim.crc, "enable CRC-aided termination");
  simulate->add_option("--crc-width", sim.crc_width, "CRC width in bits");
  simulate->add_option("--crc-poly", crc_poly_text, "CRC polynomial, hex");
  simulate->add_option("--crc-init", crc_init_text, "CRC init register, hex");
  simulate->add_flag("--crc-reflect", sim.crc_reflect, "reflected CRC variant");
  simulate->add_option("--crc-xorout", crc_xorout_text, "CRC final xor, hex");
  simulate->add_option("--trials", sim.trials, "trials per point");
  simulate->add_option("--seed", sim.seed, "base seed");
  simulate->add_option("--stop-at-errors", sim.stop_at_errors,
                       "stop a point after this many block errors (0 = run all trials)");
  simulate->add_option("--workers", sim.workers, "worker threads");
  simulate->add_option("--csv", sim.csv_path, "CSV output path (default stdout)");
  simulate->add_option("--json", sim.json_path, "JSON summary path");
  simulate->add_option("--dump-trials", sim.dump_path, "per-trial record CSV path");

  // ---- decode ----
  unsigned dec_r = 0, dec_m = 0;
  std::string dec_llr;
  double dec_budget = 1024.0;
  std::int64_t dec_moves = -1;
  unsigned dec_l = 8, dec_lhat = 8, dec_s = 5;
  std::uint64_t dec_seed = 0;
  bool dec_crc = false;
  auto* decode = app.add_subcommand("decode", "decode one LLR vector from a file");
  decode->add_option("--r", dec_r, "code order r")->required();
  decode->add_option("--m", dec_m, "code log-length m")->required();
  decode->add_option("--llr-file", dec_llr, "text file, one LLR per line")->required();
  decode->add_option("--budget", dec_budget, "FHT-unit budget L");
  decode->add_option("--moves", dec_moves, "max moves N (default ceil(budget))");
  decode->add_option("--l", dec_l, "search breadth l");
  decode->add_option("--lhat", dec_lhat, "extra breadth l-hat");
  decode->add_option("--s", dec_s, "extra-expansion budget s");
  decode->add_option("--seed", dec_seed, "seed for the random start");
  decode->add_flag("--crc", dec_crc, "CRC-aided termination (CCITT-FALSE defaults)");

  // ---- enumerate-minweight ----
  unsigned enum_r = 0, enum_m = 0;
  bool enum_dedup = false, enum_count = false, enum_formula = false;
  std::uint64_t enum_limit = 0;
  auto* enumerate =
      app.add_subcommand("enumerate-minweight", "walk the minimum-weight support tree");
  enumerate->add_option("--r", enum_r, "code order r")->required();
  enumerate->add_option("--m", enum_m, "code log-length m")->required();
  enumerate->add_flag("--dedup", enum_dedup, "emit each distinct support once");
  enumerate->add_flag("--count-only", enum_count, "print only the leaf count");
  enumerate->add_flag("--formula", enum_formula,
                      "print the closed-form count, no enumeration");
  enumerate->add_option("--limit", enum_limit, "stop after this many supports");

  // ---- ml-bound ----
  unsigned ml_r = 0, ml_m = 0;
  std::string ml_llr;
  bool ml_exact = false, ml_traversal = false;
  std::uint64_t ml_seed = 0;
  auto* ml = app.add_subcommand("ml-bound", "exact references for tiny codes");
  ml->add_flag("--exact", ml_exact, "exhaustive decoding (required)");
  ml->add_option("--r", ml_r, "code order r")->required();
  ml->add_option("--m", ml_m, "code log-length m")->required();
  ml->add_option("--llr-file", ml_llr, "text file, one LLR per line")->required();
  ml->add_flag("--traversal", ml_traversal, "use breadth-first graph traversal");
  ml->add_option("--seed", ml_seed, "traversal start seed");

  auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
  (void)selftest;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (simulate->parsed()) {
      if (!config_path.empty()) {
        const auto file = read_config(config_path);
        apply_config(simulate, file, "r", "r", sim.r);
        apply_config(simulate, file, "m", "m", sim.m);
        apply_config(simulate, file, "channel", "channel", sim.channel);
        apply_config(simulate, file, "p", "p", p_text);
        apply_config(simulate, file, "ebn0-db", "ebn0_db", ebn0_text);
        apply_config(simulate, file, "rate", "rate", rate_flag);
        apply_config(simulate, file, "budget", "budget", budget_text);
        apply_config(simulate, file, "moves", "moves", moves_flag);
        apply_config(simulate, file, "l", "l", sim.l);
        apply_config(simulate, file, "lhat", "lhat", sim.lhat);
        apply_config(simulate, file, "s", "s", sim.s);
        apply_config(simulate, file, "crc", "crc", sim.crc);
        apply_config(simulate, file, "crc-width", "crc_width", sim.crc_width);
        apply_config(simulate, file, "crc-poly", "crc_poly", crc_poly_text);
        apply_config(simulate, file, "crc-init", "crc_init", crc_init_text);
        apply_config(simulate, file, "crc-reflect", "crc_reflect", sim.crc_reflect);
        apply_config(simulate, file, "crc-xorout", "crc_xorout", crc_xorout_text);
        apply_config(simulate, file, "trials", "trials", sim.trials);
        apply_config(simulate, file, "seed", "seed", sim.seed);
        apply_config(simulate, file, "stop-at-errors", "stop_at_errors", sim.stop_at_errors);
        apply_config(simulate, file, "workers", "workers", sim.workers);
        apply_config(simulate, file, "csv", "csv", sim.csv_path);
        apply_config(simulate, file, "json", "json", sim.json_path);
        apply_config(simulate, file, "dump-trials", "dump_trials", sim.dump_path);
        for (const auto& [key, value] : file) {
          static const std::set<std::string> known{
              "r", "m", "channel", "p", "ebn0_db", "rate", "budget", "moves", "l", "lhat",
              "s", "crc", "crc_width", "crc_poly", "crc_init", "crc_reflect", "crc_xorout",
              "trials", "seed", "stop_at_errors", "workers", "csv", "json", "dump_trials"};
          if (!known.count(key))
            throw std::invalid_argument("config: unknown key '" + key + "'");
          (void)value;
        }
      }
      if (!p_text.empty()) sim.p_list = parse_list(p_text, "p");
      if (!ebn0_text.empty()) sim.ebn0_list = parse_list(ebn0_text, "ebn0_db");
      sim.budget_list = parse_list(budget_text, "budget");
      if (rate_flag > 0.0) sim.rate = rate_flag;
      if (moves_flag >= 0) sim.moves = static_cast<std::uint64_t>(moves_flag);
      sim.crc_poly = parse_hex(crc_poly_text, "crc_poly");
      sim.crc_init = parse_hex(crc_init_text, "crc_init");
      sim.crc_xorout = parse_hex(crc_xorout_text, "crc_xorout");
      if (sim.workers < 1) throw std::invalid_argument("workers: must be >= 1");
      return run_simulate(sim);
    }
    if (decode->parsed()) {
      return run_decode(dec_r, dec_m, dec_llr, dec_budget,
                        dec_moves >= 0 ? std::optional<std::uint64_t>(dec_moves)
                                       : std::nullopt,
                        dec_l, dec_lhat, dec_s, dec_seed, dec_crc, gsd::default_crc16());
    }
    if (enumerate->parsed())
      return run_enumerate(enum_r, enum_m, enum_dedup, enum_count, enum_formula, enum_limit);
    if (ml->parsed()) {
      if (!ml_exact)
        throw std::invalid_argument("--exact: required (exhaustive oracle acknowledgement)");
      return run_ml_bound(ml_r, ml_m, ml_llr, ml_traversal, ml_seed);
    }
    return run_selftest();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
