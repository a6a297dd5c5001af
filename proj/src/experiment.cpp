#include "siso/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "siso/estimators.hpp"
#include "siso/generator.hpp"

namespace siso {

namespace {

uint64_t choose(int d, int s) {
  uint64_t c = 1;
  for (int t = 0; t < s; ++t) c = c * static_cast<uint64_t>(d - t) / static_cast<uint64_t>(t + 1);
  return c;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (ns.empty() || ds.empty()) throw std::invalid_argument("experiment: empty grid");
  for (int n : ns)
    if (n < 1) throw std::invalid_argument("experiment: n must be positive");
  for (int d : ds) {
    if (d < 1) throw std::invalid_argument("experiment: d must be positive");
    if (s > d) throw std::invalid_argument("experiment: s exceeds a grid dimension");
  }
  if (s < 1 || r < 1 || trials < 1) throw std::invalid_argument("experiment: s, r, trials must be positive");
  if (sigma < 0.0) throw std::invalid_argument("experiment: sigma must be non-negative");
  if (methods.empty()) throw std::invalid_argument("experiment: no methods selected");
  if (threads < 1) throw std::invalid_argument("experiment: threads must be >= 1");
}

uint64_t ExperimentConfig::estimated_solver_calls() const {
  uint64_t total = 0;
  for (int d : ds) {
    uint64_t per_trial = 0;
    for (RecoveryMethod m : methods) {
      switch (m) {
        case RecoveryMethod::Ipir: per_trial += choose(d, s); break;
        case RecoveryMethod::Lpsr: per_trial += 1; break;
        case RecoveryMethod::Slpsr: per_trial += static_cast<uint64_t>(s); break;
      }
    }
    total += per_trial * static_cast<uint64_t>(trials) * ns.size();
  }
  return total;
}

const CellResult& RecoveryTable::cell(RecoveryMethod m, int n, int d) const {
  for (const auto& c : cells)
    if (c.method == m && c.n == n && c.d == d) return c;
  throw std::invalid_argument("RecoveryTable: no such cell");
}

RecoveryTable recovery_experiment(const ExperimentConfig& config) {
  config.validate();
  if (config.estimated_solver_calls() > config.max_solver_calls)
    throw resource_limit_error("recovery_experiment: solver-call budget exceeded");

  const int num_n = static_cast<int>(config.ns.size());
  const int num_d = static_cast<int>(config.ds.size());
  const int num_m = static_cast<int>(config.methods.size());
  const int trials = config.trials;

  RecoveryTable table;
  table.config = config;
  table.cells.resize(static_cast<size_t>(num_m) * num_n * num_d);
  for (int mi = 0; mi < num_m; ++mi) {
    for (int ni = 0; ni < num_n; ++ni) {
      for (int di = 0; di < num_d; ++di) {
        CellResult& cell = table.cells[(static_cast<size_t>(mi) * num_n + ni) * num_d + di];
        cell.method = config.methods[mi];
        cell.n = config.ns[ni];
        cell.d = config.ds[di];
        cell.trials = trials;
        cell.detail.resize(trials);
      }
    }
  }

  // Task = one (n, d, trial) triple; all methods share its instance.
  const long num_tasks = static_cast<long>(num_n) * num_d * trials;
  std::atomic<long> next_task{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto run_tasks = [&]() {
    for (;;) {
      long task = next_task.fetch_add(1);
      if (task >= num_tasks) return;
      int trial = static_cast<int>(task % trials);
      int di = static_cast<int>((task / trials) % num_d);
      int ni = static_cast<int>(task / (static_cast<long>(trials) * num_d));
      const int n = config.ns[ni], d = config.ds[di];

      const uint64_t stream = static_cast<uint64_t>(task);
      const uint64_t instance_seed = Rng::splitmix64(config.seed) + stream * 0x9E3779B97F4A7C15ULL;
      auto [dataset, model] = gen_anchor_instance(n, d, config.s, config.r, config.sigma,
                                                  instance_seed);
      const std::vector<int>& truth = model.active.indices();

      for (int mi = 0; mi < num_m; ++mi) {
        std::vector<int> selected;
        switch (config.methods[mi]) {
          case RecoveryMethod::Ipir:
            selected = ipir_fit(dataset, config.s, InterpolationRule::Min).fit.active.indices();
            break;
          case RecoveryMethod::Lpsr:
            selected = lpsr(dataset, config.s).indices();
            break;
          case RecoveryMethod::Slpsr:
            selected = slpsr(dataset, config.s).indices();
            break;
        }
        TrialRecord record;
        record.trial = trial;
        record.stream = stream;
        record.selected = selected;
        record.success = selected == truth;
        CellResult& cell = table.cells[(static_cast<size_t>(mi) * num_n + ni) * num_d + di];
        cell.detail[trial] = std::move(record);
      }
    }
  };

  auto worker = [&]() {
    try {
      run_tasks();
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next_task.store(num_tasks);  // drain remaining tasks
    }
  };

  if (config.threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < config.threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& cell : table.cells) {
    cell.successes = 0;
    for (const auto& rec : cell.detail)
      if (rec.success) cell.successes++;
  }
  return table;
}

}  // namespace siso
