// Command-line front end: fit / predict / bench / count subcommands over
// CSV and JSON files. Exit codes: 0 success, 2 invalid input or usage,
// 3 refused by a size or budget guard.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "siso/estimators.hpp"
#include "siso/grid_bounds.hpp"
#include "siso/io.hpp"
#include "siso/lp.hpp"
#include "siso/poset_count.hpp"

namespace {

constexpr uint64_t kDefaultSeed = 1729;  // used whenever --seed is not given

struct FitArgs {
  std::string data_path;
  std::string model = "input";
  std::string method = "ipir";
  int s = 1;
  std::string rule = "min";
  uint64_t seed = kDefaultSeed;
  std::string exclusions_path;
  std::string out_path = "fit.json";
  std::string lp_dump_path;
};

int run_fit(const FitArgs& args) {
  siso::NoiseModel model = args.model == "input" ? siso::NoiseModel::NoisyInput
                                                 : siso::NoiseModel::NoisyOutput;
  siso::Dataset dataset = siso::read_dataset_csv(args.data_path, model);
  if (args.s < 1) throw std::invalid_argument("--s must be >= 1");
  if (args.s > dataset.d()) throw std::invalid_argument("--s exceeds the dataset dimension");
  if (!args.lp_dump_path.empty()) siso::set_lp_debug_dump(args.lp_dump_path);

  siso::RecoveryConfig recovery;
  if (!args.exclusions_path.empty())
    recovery.exclusion_pairs = siso::read_exclusions_csv(args.exclusions_path, dataset.d());

  siso::InterpolationRule rule = siso::interpolation_rule_from_string(args.rule);
  siso::SparseFit fit = [&] {
    if (args.method == "ipir") return siso::ipir_fit(dataset, args.s, rule, recovery);
    if (args.method == "tsir-lpsr") {
      recovery.method = siso::RecoveryMethod::Lpsr;
      if (!recovery.exclusion_pairs.empty())
        throw std::invalid_argument("lpsr-based recovery cannot honor exclusion pairs; use tsir-slpsr");
      return siso::tsir_fit(dataset, args.s, recovery, rule);
    }
    if (args.method == "tsir-slpsr") {
      recovery.method = siso::RecoveryMethod::Slpsr;
      return siso::tsir_fit(dataset, args.s, recovery, rule);
    }
    throw std::invalid_argument("--method must be ipir, tsir-lpsr or tsir-slpsr");
  }();

  siso::write_file_atomic(args.out_path, siso::fit_to_json(fit));
  auto active = fit.fit.active.one_based();
  std::string active_str;
  for (size_t i = 0; i < active.size(); ++i)
    active_str += (i ? "," : "") + std::to_string(active[i]);
  std::printf("fit: method=%s s=%d rule=%s seed=%llu active={%s} objective=%.17g -> %s\n",
              args.method.c_str(), args.s, args.rule.c_str(),
              static_cast<unsigned long long>(args.seed), active_str.c_str(), fit.fit.objective,
              args.out_path.c_str());
  return 0;
}

int run_predict(const std::string& fit_path, const std::string& points_path,
                const std::string& out_path) {
  siso::SparseFit fit = siso::fit_from_json_file(fit_path);
  siso::Matrix points = siso::read_points_csv(points_path);
  if (points.cols != fit.d())
    throw std::invalid_argument("points dimension " + std::to_string(points.cols) +
                                " does not match fit dimension " + std::to_string(fit.d()));
  siso::write_predictions_csv(out_path, siso::predict(fit, points));
  std::printf("predict: %d points, rule=%s -> %s\n", points.rows, to_string(fit.rule).c_str(),
              out_path.c_str());
  return 0;
}

int run_bench(const std::string& config_path, const std::string& table_path,
              const std::string& trials_path, int threads) {
  siso::ExperimentConfig config = siso::read_experiment_config(config_path);
  config.threads = threads;
  siso::RecoveryTable table = siso::recovery_experiment(config);
  std::string csv = siso::recovery_table_to_csv(table);
  siso::write_file_atomic(table_path, csv);
  siso::write_file_atomic(trials_path, siso::recovery_table_to_json(table));
  std::fputs(csv.c_str(), stdout);
  return 0;
}

struct CountArgs {
  std::string points_path;
  int m = 2;
  std::vector<int> ns;
  int d = 2;
  int trials = 200;
  uint64_t seed = kDefaultSeed;
  std::string out_path;
};

int run_count(const CountArgs& args) {
  if (!args.points_path.empty()) {
    siso::PointPoset poset(siso::read_points_csv(args.points_path));
    siso::LabelingCount count = args.m == 2 ? siso::count_binary_labelings(poset)
                                            : siso::count_m_labelings(poset, args.m);
    std::printf("n=%d d=%d m=%d labelings=%s\n", poset.n(), poset.d(), args.m,
                count.count.str().c_str());
    return 0;
  }
  if (args.ns.empty())
    throw std::invalid_argument("count: give either --points or --n (with --d, --trials, --seed)");
  std::string csv = "n,d,mean_count,lower,upper,within\n";
  char buf[160];
  for (int n : args.ns) {
    auto row = siso::empirical_labeling_bounds(n, args.d, args.trials, args.seed);
    snprintf(buf, sizeof(buf), "%d,%d,%.17g,%.17g,%.17g,%s\n", n, args.d, row.mean_count,
             row.lower_bound, row.upper_bound, row.within ? "true" : "false");
    csv += buf;
  }
  if (!args.out_path.empty())
    siso::write_file_atomic(args.out_path, csv);
  std::fputs(csv.c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "siso: sparse coordinate-wise monotone regression.\n"
      "Exit codes: 0 success, 2 invalid input, 3 size/budget guard refusal."};
  app.require_subcommand(1);

  FitArgs fit_args;
  auto* fit = app.add_subcommand("fit", "Fit a sparse monotone estimator to a dataset CSV");
  fit->add_option("--data", fit_args.data_path, "dataset CSV (header x1..xd,y)")->required();
  fit->add_option("--model", fit_args.model, "noise model: input|output")
      ->check(CLI::IsMember({"input", "output"}));
  fit->add_option("--method", fit_args.method, "ipir|tsir-lpsr|tsir-slpsr")
      ->check(CLI::IsMember({"ipir", "tsir-lpsr", "tsir-slpsr"}));
  fit->add_option("--s", fit_args.s, "number of active coordinates")->required();
  fit->add_option("--rule", fit_args.rule, "interpolation rule: min|max")
      ->check(CLI::IsMember({"min", "max"}));
  fit->add_option("--seed", fit_args.seed, "seed recorded with the run (default 1729)");
  fit->add_option("--exclusions", fit_args.exclusions_path, "CSV of negation pairs (header i,j)");
  fit->add_option("--out", fit_args.out_path, "output fit JSON path");
  fit->add_option("--lp-dump", fit_args.lp_dump_path, "append every solved LP to this text file");

  std::string predict_fit, predict_points, predict_out = "predictions.csv";
  auto* predict = app.add_subcommand("predict", "Evaluate a saved fit on a points CSV");
  predict->add_option("--fit", predict_fit, "fit JSON from the fit subcommand")->required();
  predict->add_option("--points", predict_points, "points CSV (header x1..xd)")->required();
  predict->add_option("--out", predict_out, "output predictions CSV");

  std::string bench_config, bench_table = "recovery_table.csv", bench_trials = "recovery_trials.json";
  int bench_threads = 1;
  auto* bench = app.add_subcommand("bench", "Run the support-recovery benchmark grid");
  bench->add_option("--config", bench_config, "experiment config file")->required();
  bench->add_option("--out-table", bench_table, "output table CSV");
  bench->add_option("--out-trials", bench_trials, "output per-trial JSON");
  bench->add_option("--threads", bench_threads, "worker threads (default 1; results identical)");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count monotone labelings / bound sweeps");
  count->add_option("--points", count_args.points_path, "points CSV (header x1..xd)");
  count->add_option("--m", count_args.m, "label count (default 2)");
  count->add_option("--n", count_args.ns, "sweep sizes (comma separated)")->delimiter(',');
  count->add_option("--d", count_args.d, "sweep dimension (2..4)");
  count->add_option("--trials", count_args.trials, "point sets per sweep cell");
  count->add_option("--seed", count_args.seed, "sweep seed (default 1729)");
  count->add_option("--out", count_args.out_path, "also write the sweep CSV here");

  try {
    app.parse(argc, argv);
    if (fit->parsed()) return run_fit(fit_args);
    if (predict->parsed()) return run_predict(predict_fit, predict_points, predict_out);
    if (bench->parsed()) return run_bench(bench_config, bench_table, bench_trials, bench_threads);
    if (count->parsed()) return run_count(count_args);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const siso::resource_limit_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
