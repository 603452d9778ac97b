#pragma once

#include "hasim/sim/random.hpp"

namespace hasim {

// A platform delay: either a constant or a seeded distribution.
struct LatencySpec {
  enum class Kind { constant, uniform, normal };

  Kind kind = Kind::constant;
  double a = 0.0;  // value | lower bound | mean
  double b = 0.0;  // unused | upper bound | stddev

  double sample(RandomSource& rng) const;

  static LatencySpec constant(double v) { return {Kind::constant, v, 0.0}; }
  static LatencySpec uniform_range(double lo, double hi) { return {Kind::uniform, lo, hi}; }
  static LatencySpec gaussian(double mean, double stddev) { return {Kind::normal, mean, stddev}; }
};

// Timing knobs of the simulated platform for one run. The harness picks a
// calibrated variant per (controller kind, state controller on/off); values
// here are only loose defaults for direct library use.
struct LatencyProfile {
  // failure detection: container kill or node loss -> pod marked not ready
  LatencySpec detection_delay = LatencySpec::constant(0.5);
  // in-place restart of a killed container on a healthy node
  LatencySpec container_restart = LatencySpec::constant(1.0);
  // pod object creation -> pod ready
  LatencySpec pod_create = LatencySpec::constant(1.0);
  // pod deletion request (after any graceful period) -> pod gone
  LatencySpec pod_delete = LatencySpec::constant(0.3);
  // node loss detection -> disposable pods recreated on other nodes
  LatencySpec node_eviction_timeout = LatencySpec::constant(40.0);
  // label/readiness change -> service endpoint sets reflect it
  LatencySpec endpoint_update = LatencySpec::constant(0.05);
  // environment write -> value visible to the pod's processes
  LatencySpec env_propagation = LatencySpec::constant(0.05);
  // state controller busy time per handled event
  LatencySpec sc_handling = LatencySpec::constant(0.03);
  // reading the last persisted state back
  LatencySpec state_restore = LatencySpec::constant(0.1);
  // restored state -> serving again
  LatencySpec resume_delay = LatencySpec::constant(0.05);
  // node rejoin -> pods bound to it are running again (covers kubelet
  // re-registration and cold container starts, which dominate in practice)
  LatencySpec node_pod_restart = LatencySpec::constant(2.0);
  // replication message send -> delivery at the standby
  LatencySpec replication_delivery = LatencySpec::constant(0.005);

  // workload process periods
  double checkpoint_interval = 1.0;
  double env_poll_interval = 0.05;
};

}  // namespace hasim
