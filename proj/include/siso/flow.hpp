#pragma once

#include <limits>
#include <vector>

#include "siso/types.hpp"

namespace siso {

/// Directed flow network with non-negative real capacities. Use
/// kInfiniteCapacity (or any sufficiently large finite value) for
/// uncuttable arcs.
struct FlowNetwork {
  static constexpr double kInfiniteCapacity = std::numeric_limits<double>::infinity();

  explicit FlowNetwork(int node_count, int source, int sink)
      : num_nodes(node_count), source(source), sink(sink) {
    if (node_count < 2 || source < 0 || sink < 0 || source >= node_count || sink >= node_count)
      throw std::invalid_argument("FlowNetwork: invalid node count or terminals");
    if (source == sink) throw std::invalid_argument("FlowNetwork: source must differ from sink");
  }

  void add_arc(int from, int to, double capacity) {
    if (from < 0 || from >= num_nodes || to < 0 || to >= num_nodes)
      throw std::invalid_argument("FlowNetwork: arc endpoint out of range");
    if (capacity < 0.0) throw std::invalid_argument("FlowNetwork: negative capacity");
    arcs.push_back({from, to, capacity});
  }

  struct Arc {
    int from, to;
    double capacity;
  };

  int num_nodes;
  int source, sink;
  std::vector<Arc> arcs;
};

struct MaxFlowResult {
  double value = 0.0;
  /// Minimal source side of a minimum cut: node i is true iff i is
  /// reachable from the source in the final residual graph.
  std::vector<bool> source_side;
  /// Sum of capacities of arcs crossing the returned cut; equals value up
  /// to rounding (checked internally).
  double cut_capacity = 0.0;
};

/// Dinic's algorithm. Deterministic given arc insertion order. The result
/// carries the minimal min-cut source side, and max-flow/min-cut equality
/// is verified before returning.
MaxFlowResult max_flow(const FlowNetwork& network);

}  // namespace siso
