#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "etdkf/linalg.hpp"
#include "etdkf/models.hpp"

namespace etdkf {

// Peer-to-peer topology: arc (i, j) means node j receives from node i.
// Self-arcs are excluded; the self-weight lives on the Pi diagonal.
struct NetworkGraph {
  int node_count = 0;
  std::vector<std::array<double, 2>> positions;   // m
  std::vector<std::pair<int, int>> arcs;          // sorted, unique
  std::vector<int> sensor_nodes;                  // sorted
  std::uint64_t seed = 0;
  double radius = 0.0;                            // final connection radius, m

  bool has_arc(int from, int to) const;
  bool is_sensor(int node) const;
  std::vector<std::vector<int>> in_neighbors() const;
};

// Random geometric graph over the area: uniform node placement,
// bidirectional arcs within `radius`, uniformly chosen sensor subset.
// The radius grows by 10% (capped at the area diagonal) until the graph
// is strongly connected. Deterministic given the seed.
NetworkGraph build_geometric_graph(int n, int sensor_count, std::array<double, 2> area,
                                   double radius, std::uint64_t seed);

// Row-stochastic consensus weights.
struct ConsensusWeights {
  Mat pi;
};

// pi[i][j] = 1/(1 + max(deg_i, deg_j)) for neighbors, remainder on the
// diagonal. Needs a symmetric graph; uses only local degree information.
ConsensusWeights metropolis_weights(const NetworkGraph& g);

bool is_strongly_connected(const NetworkGraph& g);

// True iff some power l <= max_power of the zero pattern of Pi is
// entrywise positive (boolean matrix powers).
bool is_primitive(const ConsensusWeights& w, int max_power);

// Collective observability: rank of [C; CA; ...; CA^{n-1}] with C stacking
// every sensor's observation row. Nonlinear sensors contribute their
// Jacobian at `nominal` (a diagnostic linearization, not a guarantee).
bool check_collective_observability(const LinearDynamics& d,
                                    const std::vector<MeasurementModel>& sensors,
                                    const StateVector& nominal);

// Reproducibility dump/load (JSON document).
std::string graph_to_json(const NetworkGraph& g);
NetworkGraph graph_from_json(const std::string& text);

}  // namespace etdkf
