// msm: synthetic dataset generation, multi-set matching, evaluation, and
// benchmark sweeps over the MSMF/MSMR file formats (see docs/formats.md).

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "msm/io.hpp"
#include "msm/sweep.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct MetaEcho {
  int n_inliers = -1;
  int n_outliers = -1;
  double epsilon = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t seed = 0;
  bool has_seed = false;
};

// synth writes its parameters as `key=value` tokens into the meta line;
// match/eval echo them back into report rows when present.
MetaEcho parse_meta(const std::string& provenance) {
  MetaEcho echo;
  std::istringstream ss(provenance);
  std::string token;
  while (ss >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    try {
      if (key == "inliers") echo.n_inliers = std::stoi(value);
      else if (key == "outliers") echo.n_outliers = std::stoi(value);
      else if (key == "eps") echo.epsilon = std::stod(value);
      else if (key == "seed") {
        echo.seed = std::stoull(value);
        echo.has_seed = true;
      }
    } catch (const std::exception&) {
      // meta is best-effort; unparseable tokens are ignored
    }
  }
  return echo;
}

std::string synth_meta(const msm::SyntheticSpec& spec) {
  std::ostringstream out;
  out << "synth sets=" << spec.n_sets << " inliers=" << spec.n_inliers
      << " outliers=" << spec.n_outliers << " dim=" << spec.dim << " eps=" << spec.epsilon;
  if (!spec.epsilon_choices.empty()) {
    out << " eps_mix=";
    for (std::size_t i = 0; i < spec.epsilon_choices.size(); ++i) {
      if (i) out << ":";
      out << spec.epsilon_choices[i];
    }
  }
  out << " seed=" << spec.seed;
  return out.str();
}

msm::Dataset load_dataset(const std::string& path, bool pad) {
  msm::Dataset data = msm::read_msmf_file(path);
  if (msm::is_ragged(data)) {
    if (!pad)
      throw msm::DataError("'" + path + "' has ragged node counts; pass --pad to add dummy nodes");
    msm::pad_dataset(data);
  }
  return data;
}

void emit_report(const msm::TrialReport& report) {
  std::cout << msm::csv_header() << "\n" << msm::csv_row(report) << "\n";
}

int run_synth(const msm::SyntheticSpec& spec, const std::string& out_path) {
  msm::Dataset data = msm::generate(spec);
  data.provenance = synth_meta(spec);
  msm::write_msmf_file(out_path, data);
  return 0;
}

int run_match(const std::string& input, const std::string& method, const msm::MatchOptions& opts,
              bool pad, const std::string& accuracy_mode, const std::string& out_path,
              std::uint64_t seed_flag) {
  const msm::Dataset data = load_dataset(input, pad);
  const msm::MethodOutput output = msm::run_method(method, data.sets, opts);

  msm::TrialReport report = msm::make_report(method, output, data.sets,
                                             data.truth ? &*data.truth : nullptr, accuracy_mode);
  const MetaEcho echo = parse_meta(data.provenance);
  report.n_sets = static_cast<int>(data.sets.size());
  report.n_inliers = echo.n_inliers;
  report.n_outliers = echo.n_outliers;
  report.epsilon = echo.epsilon;
  report.seed = echo.has_seed ? echo.seed : seed_flag;
  emit_report(report);

  if (!out_path.empty()) {
    msm::MatchResult result;
    if (output.star)
      result.star = output.star;
    else
      result.config = output.config;
    msm::write_msmr_file(out_path, result);
  }
  return 0;
}

int run_eval(const std::string& input, const std::string& result_path, bool pad,
             const std::string& accuracy_mode) {
  const msm::Dataset data = load_dataset(input, pad);
  const msm::MatchResult result = msm::read_msmr_file(result_path);

  msm::MethodOutput output;
  output.runtime_ms = std::numeric_limits<double>::quiet_NaN();
  if (result.star) {
    output.star = result.star;
    output.config = msm::star_to_config(*result.star);
  } else {
    output.config = *result.config;
  }
  if (output.config.set_count() != static_cast<int>(data.sets.size()) ||
      output.config.node_count() != data.sets[0].node_count())
    throw msm::DataError("result dimensions do not match the dataset");

  msm::TrialReport report = msm::make_report("eval", output, data.sets,
                                             data.truth ? &*data.truth : nullptr, accuracy_mode);
  const MetaEcho echo = parse_meta(data.provenance);
  report.n_sets = static_cast<int>(data.sets.size());
  report.n_inliers = echo.n_inliers;
  report.n_outliers = echo.n_outliers;
  report.epsilon = echo.epsilon;
  report.seed = echo.seed;
  emit_report(report);
  return 0;
}

int run_bench(const msm::SweepSpec& spec, const std::string& out_path) {
  const std::vector<msm::TrialReport> reports = msm::run_sweep(spec);
  const std::string csv = msm::sweep_to_csv(reports);
  if (out_path.empty() || out_path == "-") {
    std::cout << csv;
  } else {
    std::ofstream out(out_path);
    if (!out) throw msm::DataError("cannot open '" + out_path + "' for writing");
    out << csv;
    if (!out) throw msm::DataError("write to '" + out_path + "' failed");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-set feature matching benchmark"};
  app.require_subcommand(1);

  // synth
  msm::SyntheticSpec synth;
  std::string synth_out;
  auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic MSMF dataset");
  synth_cmd->add_option("--sets", synth.n_sets, "number of feature sets")->required();
  synth_cmd->add_option("--inliers", synth.n_inliers, "inlier nodes per set")->required();
  synth_cmd->add_option("--outliers", synth.n_outliers, "outlier nodes per set");
  synth_cmd->add_option("--dim", synth.dim, "attribute dimension");
  synth_cmd->add_option("--eps", synth.epsilon, "deformation noise std");
  synth_cmd->add_option("--eps-mix", synth.epsilon_choices, "per-set eps drawn from this list")
      ->delimiter(',');
  synth_cmd->add_option("--seed", synth.seed, "RNG seed");
  synth_cmd->add_option("-o,--output", synth_out, "output MSMF path")->required();

  // match
  std::string match_input, match_method, match_out;
  std::string match_accuracy = "pairwise";
  msm::MatchOptions match_opts;
  std::uint64_t match_seed = 0;
  bool match_pad = false;
  auto* match_cmd = app.add_subcommand("match", "run one matcher on a dataset");
  match_cmd->add_option("input", match_input, "MSMF dataset")->required();
  match_cmd->add_option("--method", match_method,
                        "hungPair | hungLin | matchCluster | matchClusterFast")
      ->required();
  match_cmd->add_option("--sigma-sq", match_opts.cost.sigma_sq, "cost scale sigma^2");
  match_cmd->add_option("--max-iters", match_opts.max_outer_iters, "outer sweep budget");
  match_cmd->add_option("--seed", match_seed, "matcher RNG seed");
  match_cmd->add_flag("--pad", match_pad, "pad ragged sets with dummy nodes");
  match_cmd->add_option("--accuracy", match_accuracy, "pairwise | star");
  match_cmd->add_option("-o,--output", match_out, "write the MSMR result here");

  // eval
  std::string eval_input, eval_result;
  std::string eval_accuracy = "pairwise";
  bool eval_pad = false;
  auto* eval_cmd = app.add_subcommand("eval", "re-score a stored MSMR result");
  eval_cmd->add_option("input", eval_input, "MSMF dataset")->required();
  eval_cmd->add_option("result", eval_result, "MSMR result")->required();
  eval_cmd->add_flag("--pad", eval_pad, "pad ragged sets with dummy nodes");
  eval_cmd->add_option("--accuracy", eval_accuracy, "pairwise | star");

  // bench
  msm::SweepSpec sweep;
  std::string bench_out;
  std::vector<std::string> bench_methods = {"all"};
  auto* bench_cmd = app.add_subcommand("bench", "parameter sweep, one CSV row per trial");
  bench_cmd->add_option("--axis", sweep.axis, "epsilon | outliers | sets");
  bench_cmd->add_option("--values", sweep.values, "axis values")->required()->delimiter(',');
  bench_cmd->add_option("--sets", sweep.n_sets, "number of feature sets");
  bench_cmd->add_option("--inliers", sweep.n_inliers, "inlier nodes per set");
  bench_cmd->add_option("--outliers", sweep.n_outliers, "outlier nodes per set");
  bench_cmd->add_option("--eps", sweep.epsilon, "deformation noise std");
  bench_cmd->add_option("--eps-mix", sweep.epsilon_choices, "per-set eps drawn from this list")
      ->delimiter(',');
  bench_cmd->add_option("--dim", sweep.dim, "attribute dimension");
  bench_cmd->add_option("--trials", sweep.trials, "trials per grid point");
  bench_cmd->add_option("--seed", sweep.base_seed, "base seed; trial t uses seed+t");
  bench_cmd->add_option("--methods", bench_methods, "method list or 'all'")->delimiter(',');
  bench_cmd->add_option("--sigma-sq", sweep.sigma_sq, "cost scale sigma^2");
  bench_cmd->add_option("--max-iters", sweep.max_outer_iters, "outer sweep budget");
  bench_cmd->add_option("--accuracy", sweep.accuracy_mode, "pairwise | star");
  bench_cmd->add_option("-o,--output", bench_out, "CSV path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (synth_cmd->parsed()) return run_synth(synth, synth_out);
    if (match_cmd->parsed()) {
      match_opts.seed = match_seed;
      return run_match(match_input, match_method, match_opts, match_pad, match_accuracy,
                       match_out, match_seed);
    }
    if (eval_cmd->parsed()) return run_eval(eval_input, eval_result, eval_pad, eval_accuracy);
    if (bench_cmd->parsed()) {
      sweep.methods.clear();
      for (const auto& m : bench_methods) {
        if (m == "all") {
          for (const auto& name : msm::all_method_names()) sweep.methods.push_back(name);
        } else {
          sweep.methods.push_back(m);
        }
      }
      return run_bench(sweep, bench_out);
    }
  } catch (const msm::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return 0;
}
