#include "etdkf/network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <nlohmann/json.hpp>

#include "etdkf/errors.hpp"
#include "etdkf/rng.hpp"

namespace etdkf {

bool NetworkGraph::has_arc(int from, int to) const {
  return std::binary_search(arcs.begin(), arcs.end(), std::make_pair(from, to));
}

bool NetworkGraph::is_sensor(int node) const {
  return std::binary_search(sensor_nodes.begin(), sensor_nodes.end(), node);
}

std::vector<std::vector<int>> NetworkGraph::in_neighbors() const {
  std::vector<std::vector<int>> in(node_count);
  for (const auto& [from, to] : arcs) in[to].push_back(from);
  return in;
}

namespace {

std::vector<std::pair<int, int>> arcs_within_radius(const std::vector<std::array<double, 2>>& pos,
                                                    double radius) {
  std::vector<std::pair<int, int>> arcs;
  const int n = static_cast<int>(pos.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = std::hypot(pos[i][0] - pos[j][0], pos[i][1] - pos[j][1]);
      if (d <= radius) {
        arcs.emplace_back(i, j);
        arcs.emplace_back(j, i);
      }
    }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

}  // namespace

NetworkGraph build_geometric_graph(int n, int sensor_count, std::array<double, 2> area,
                                   double radius, std::uint64_t seed) {
  if (n < 2) throw NonPositiveInput("need at least 2 nodes");
  if (sensor_count < 0 || sensor_count > n) throw ConfigInvalid("sensor count out of range");
  if (!(radius > 0.0)) throw NonPositiveInput("connection radius must be > 0");

  Rng rng(seed);
  NetworkGraph g;
  g.node_count = n;
  g.seed = seed;
  g.positions.resize(n);
  for (auto& p : g.positions) {
    p[0] = rng.uniform(0.0, area[0]);
    p[1] = rng.uniform(0.0, area[1]);
  }

  // Partial Fisher-Yates draws the sensor subset uniformly.
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  for (int i = 0; i < sensor_count; ++i) std::swap(ids[i], ids[rng.uniform_int(i, n - 1)]);
  g.sensor_nodes.assign(ids.begin(), ids.begin() + sensor_count);
  std::sort(g.sensor_nodes.begin(), g.sensor_nodes.end());

  const double diagonal = std::hypot(area[0], area[1]);
  bool at_cap = false;
  for (;;) {
    g.radius = radius;
    g.arcs = arcs_within_radius(g.positions, radius);
    if (is_strongly_connected(g)) return g;
    if (at_cap) throw CannotConnect("graph not connected even at the area diagonal");
    radius *= 1.1;
    if (radius >= diagonal) {
      radius = diagonal;
      at_cap = true;
    }
  }
}

ConsensusWeights metropolis_weights(const NetworkGraph& g) {
  const int n = g.node_count;
  std::vector<int> degree(n, 0);
  for (const auto& [from, to] : g.arcs) {
    if (!g.has_arc(to, from)) throw AsymmetricGraph();
    ++degree[to];
  }
  ConsensusWeights w;
  w.pi = Mat(n, n);
  for (const auto& [from, to] : g.arcs)
    w.pi(to, from) = 1.0 / (1.0 + std::max(degree[to], degree[from]));
  for (int i = 0; i < n; ++i) {
    double off = 0.0;
    for (int j = 0; j < n; ++j)
      if (j != i) off += w.pi(i, j);
    w.pi(i, i) = 1.0 - off;
  }
  return w;
}

bool is_strongly_connected(const NetworkGraph& g) {
  const int n = g.node_count;
  if (n == 0) return false;
  std::vector<std::vector<int>> fwd(n), rev(n);
  for (const auto& [from, to] : g.arcs) {
    fwd[from].push_back(to);
    rev[to].push_back(from);
  }
  auto reaches_all = [n](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
    }
    return count == n;
  };
  return reaches_all(fwd) && reaches_all(rev);
}

bool is_primitive(const ConsensusWeights& w, int max_power) {
  const std::size_t n = w.pi.rows();
  const std::size_t words = (n + 63) / 64;
  // Bitset rows of the zero pattern; row i of B^(l+1) ORs the rows of B
  // selected by row i of B^l.
  std::vector<std::uint64_t> base(n * words, 0), cur;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (w.pi(i, j) > 0.0) base[i * words + j / 64] |= 1ULL << (j % 64);
  cur = base;

  auto all_positive = [&](const std::vector<std::uint64_t>& m) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t wd = 0; wd < words; ++wd) {
        std::uint64_t want = (wd + 1 < words || n % 64 == 0) ? ~0ULL : ((1ULL << (n % 64)) - 1);
        if ((m[i * words + wd] & want) != want) return false;
      }
    return true;
  };

  for (int power = 1; power <= max_power; ++power) {
    if (all_positive(cur)) return true;
    std::vector<std::uint64_t> next(n * words, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (cur[i * words + j / 64] >> (j % 64) & 1)
          for (std::size_t wd = 0; wd < words; ++wd) next[i * words + wd] |= base[j * words + wd];
    cur = std::move(next);
  }
  return false;
}

bool check_collective_observability(const LinearDynamics& d,
                                    const std::vector<MeasurementModel>& sensors,
                                    const StateVector& nominal) {
  if (sensors.empty()) return false;
  const std::size_t n = kStateDim;
  Mat stacked(sensors.size() * n, n);
  std::size_t row = 0;
  Mat a_power = Mat::identity(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (const auto& s : sensors) {
      const Vec c = jacobian(s, nominal);
      for (std::size_t j = 0; j < n; ++j) {
        double v = 0.0;
        for (std::size_t k = 0; k < n; ++k) v += c[k] * a_power(k, j);
        stacked(row, j) = v;
      }
      ++row;
    }
    a_power = a_power * d.A;
  }
  // Singular values via the 4x4 Gram matrix; rank at 1e-8 relative cut.
  const Mat gram = stacked.transposed() * stacked;
  const Vec ev = symmetric_eigenvalues(gram);
  const double sigma_max = std::sqrt(std::max(ev.back(), 0.0));
  if (sigma_max == 0.0) return false;
  const double cut = 1e-8 * sigma_max;
  int rank = 0;
  for (double e : ev)
    if (e > 0.0 && std::sqrt(e) > cut) ++rank;
  return rank == static_cast<int>(n);
}

std::string graph_to_json(const NetworkGraph& g) {
  nlohmann::json j;
  j["node_count"] = g.node_count;
  j["seed"] = g.seed;
  j["radius"] = g.radius;
  j["positions"] = g.positions;
  j["arcs"] = g.arcs;
  j["sensor_nodes"] = g.sensor_nodes;
  return j.dump(2);
}

NetworkGraph graph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  NetworkGraph g;
  g.node_count = j.at("node_count").get<int>();
  g.seed = j.at("seed").get<std::uint64_t>();
  g.radius = j.at("radius").get<double>();
  g.positions = j.at("positions").get<std::vector<std::array<double, 2>>>();
  g.arcs = j.at("arcs").get<std::vector<std::pair<int, int>>>();
  g.sensor_nodes = j.at("sensor_nodes").get<std::vector<int>>();
  std::sort(g.arcs.begin(), g.arcs.end());
  std::sort(g.sensor_nodes.begin(), g.sensor_nodes.end());
  return g;
}

}  // namespace etdkf
