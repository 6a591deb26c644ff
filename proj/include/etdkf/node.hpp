#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "etdkf/gaussian.hpp"
#include "etdkf/models.hpp"
#include "etdkf/trigger.hpp"

namespace etdkf {

struct BroadcastMessage {
  int sender = 0;
  int time_index = 0;
  int consensus_step = 0;
  GaussianInfo density;
};

// Canonical wire layout: sender, time index, consensus step, state
// dimension, the information vector, then the upper triangle of the
// information matrix row by row -- every field a little-endian IEEE-754
// double. Used to count exact payload bytes in the simulator.
std::vector<std::uint8_t> serialize_message(const BroadcastMessage& m);
BroadcastMessage deserialize_message(const std::vector<std::uint8_t>& bytes);
std::size_t message_wire_size(std::size_t dim);

// One node's complete protocol state: its local posterior, its own
// reference density (what the out-neighbors believe about it), and its
// stored copy of every in-neighbor's reference density. The references
// are empty until the node's first broadcast, which is forced.
struct NodeState {
  int node_id = 0;
  bool is_sensor = false;
  GaussianInfo local;
  std::optional<GaussianInfo> self_reference;
  std::map<int, GaussianInfo> neighbor_references;
  Vec weights_row;  // this node's row of Pi
  TriggerCalibration calib;
  int belief_time = 0;
};

// One message slot (possibly empty) per in-neighbor.
using Inbox = std::map<int, std::optional<BroadcastMessage>>;

// Correction step: sensor nodes fold in their measurement, communication
// nodes keep the prior untouched. The measurement must be present exactly
// when the node is a sensor.
NodeState node_correct(NodeState s,
                       const std::optional<std::pair<double, MeasurementModel>>& measurement);

struct DecideResult {
  bool transmitted = false;
  std::optional<BroadcastMessage> message;
  NodeState state;
};

// The event trigger: transmit iff D(local || self reference) > tau, forced
// on the very first decision when no reference exists yet.
DecideResult decide_and_pack(NodeState s, int time_index, int consensus_step);

// Same bookkeeping with an externally supplied decision (full-rate and
// scheduled strategies); still forces the initializing broadcast.
DecideResult apply_decision(NodeState s, bool transmit, int time_index, int consensus_step);

// One consensus step: neighbors that transmitted contribute their density
// (and refresh the stored reference); silent neighbors contribute their
// stored reference flattened by delta. Then the convex information-pair
// combination with this node's Pi row.
NodeState node_fuse(NodeState s, const Inbox& inbox);

// Advance local, self reference, and every stored neighbor reference
// through the model prediction step. Every out-neighbor runs the same map
// on the same values, which is what keeps the stored copies consistent.
NodeState node_predict(NodeState s, const LinearDynamics& d);

}  // namespace etdkf
