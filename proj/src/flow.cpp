#include "siso/flow.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace siso {

namespace {

struct ResidualArc {
  int to;
  int rev;  // index of the reverse arc in adj[to]
  double cap;
  bool forward;  // true for original arcs (used when summing the cut)
};

class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net) : net_(net), adj_(net.num_nodes) {
    for (const auto& a : net.arcs) {
      adj_[a.from].push_back({a.to, static_cast<int>(adj_[a.to].size()), a.capacity, true});
      adj_[a.to].push_back({a.from, static_cast<int>(adj_[a.from].size()) - 1, 0.0, false});
    }
  }

  double run() {
    double total = 0.0;
    while (bfs()) {
      iter_.assign(net_.num_nodes, 0);
      for (;;) {
        double pushed = dfs(net_.source, std::numeric_limits<double>::infinity());
        if (pushed <= 0.0) break;
        if (std::isinf(pushed))
          throw std::invalid_argument("max_flow: network admits unbounded flow");
        total += pushed;
      }
    }
    return total;
  }

  std::vector<bool> reachable_from_source() const {
    std::vector<bool> seen(net_.num_nodes, false);
    std::queue<int> q;
    q.push(net_.source);
    seen[net_.source] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const auto& a : adj_[u]) {
        if (a.cap > kResidualEps && !seen[a.to]) {
          seen[a.to] = true;
          q.push(a.to);
        }
      }
    }
    return seen;
  }

  double cut_capacity(const std::vector<bool>& source_side) const {
    double sum = 0.0;
    for (const auto& a : net_.arcs)
      if (source_side[a.from] && !source_side[a.to]) sum += a.capacity;
    return sum;
  }

 private:
  static constexpr double kResidualEps = 1e-12;

  bool bfs() {
    level_.assign(net_.num_nodes, -1);
    std::queue<int> q;
    level_[net_.source] = 0;
    q.push(net_.source);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const auto& a : adj_[u]) {
        if (a.cap > kResidualEps && level_[a.to] < 0) {
          level_[a.to] = level_[u] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[net_.sink] >= 0;
  }

  double dfs(int u, double limit) {
    if (u == net_.sink) return limit;
    for (int& i = iter_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
      ResidualArc& a = adj_[u][i];
      if (a.cap <= kResidualEps || level_[a.to] != level_[u] + 1) continue;
      double pushed = dfs(a.to, std::min(limit, a.cap));
      if (pushed > 0.0) {
        a.cap -= pushed;
        adj_[a.to][a.rev].cap += pushed;
        return pushed;
      }
    }
    return 0.0;
  }

  const FlowNetwork& net_;
  std::vector<std::vector<ResidualArc>> adj_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& network) {
  Dinic dinic(network);
  MaxFlowResult result;
  result.value = dinic.run();
  result.source_side = dinic.reachable_from_source();
  result.cut_capacity = dinic.cut_capacity(result.source_side);
  // Max-flow/min-cut duality check; tolerance scaled by the flow value.
  double tol = 1e-9 * std::max(1.0, std::abs(result.value));
  if (std::isfinite(result.value) && std::abs(result.value - result.cut_capacity) > tol)
    throw std::logic_error("max_flow: flow value does not match cut capacity");
  return result;
}

}  // namespace siso
