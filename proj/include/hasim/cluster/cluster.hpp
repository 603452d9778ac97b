#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hasim/cluster/latency.hpp"
#include "hasim/sim/engine.hpp"

namespace hasim {

enum class ControllerKind { stateful_ordered, stateless_parallel };
enum class Routing { round_robin, random_pick };
enum class NodeFailMode { shutdown, reboot };
enum class ApiEventKind { pod_failure, pod_ready, pod_added, pod_deleted, scale_out, scale_in };

const char* to_string(ControllerKind kind);
const char* to_string(ApiEventKind kind);
ControllerKind controller_kind_from_string(const std::string& s);

struct VolumeBinding {
  std::string volume_id;
  std::string storage_area_key;
};

struct Pod {
  std::string name;
  SimTime creation_time = 0.0;
  std::string node;
  bool ready = false;
  bool container_alive = true;
  std::map<std::string, std::string> labels;
  std::map<std::string, std::string> env;  // committed (pod-visible) values
  VolumeBinding volume;
  std::string controller;
  std::string replacement_of;  // original identity, for eviction replacements

  const std::string* label(const std::string& key) const;
};

struct Node {
  std::string name;
  bool up = true;
  std::set<std::string> hosted;
};

struct ServiceObject {
  std::string name;
  std::map<std::string, std::string> selector;
  Routing routing = Routing::round_robin;
  std::vector<std::string> endpoints;  // ready matching pods, in name order
  std::size_t rr_cursor = 0;

  bool matches(const Pod& pod) const;
};

struct WorkloadControllerSpec {
  std::string name;
  ControllerKind kind = ControllerKind::stateful_ordered;
  int replicas = 0;
  double graceful_termination = 0.0;
};

struct ApiEvent {
  SimTime t = 0.0;
  ApiEventKind kind = ApiEventKind::pod_added;
  std::vector<std::string> pods;
  std::string request;  // originating scale request, when any
};

// Passive hooks for co-simulated components (the workload, mostly). All
// callbacks run inline from cluster mutations on the single timeline.
class ClusterListener {
 public:
  virtual ~ClusterListener() = default;
  virtual void on_pod_added(const Pod&) {}
  virtual void on_pod_ready(const Pod&) {}
  virtual void on_pod_not_ready(const Pod&) {}
  virtual void on_container_killed(const Pod&) {}
  virtual void on_pod_terminating(const Pod&) {}
  virtual void on_pod_deleted(const Pod&) {}
  virtual void on_env_visible(const Pod&, const std::string& key, const std::string& value) {}
  virtual void on_endpoints_changed(const ServiceObject&) {}
};

// The simulated orchestration substrate: worker nodes, pods with labels and
// volumes, label-selector services, ordered and parallel workload
// controllers, fault handling, and a watchable API event stream.
class Cluster {
 public:
  Cluster(Engine& engine, LatencyProfile profile, int worker_nodes = 8);

  Engine& engine() { return engine_; }
  const LatencyProfile& profile() const { return profile_; }

  // -- workload controllers ------------------------------------------------
  // Creates the controller and its initial pods. Ordered controllers create
  // them one after another (pod i starts only once pod i-1 is ready);
  // parallel controllers create all of them concurrently. Returns a request
  // id whose completion can be observed with on_request_complete().
  std::string deploy(const WorkloadControllerSpec& spec);

  // Scales to `target` replicas. Ordered controllers add/remove ordinals
  // sequentially (removal from the highest ordinal down, volumes retained);
  // parallel controllers work concurrently with seeded victim selection.
  std::string scale(const std::string& controller, int target);

  void on_request_complete(const std::string& request, std::function<void()> fn);

  // -- fault injection -----------------------------------------------------
  std::string inject_container_failure(const std::string& pod);
  std::string inject_node_failure(const std::string& node, NodeFailMode mode,
                                  double reboot_duration = 0.0);

  // -- services ------------------------------------------------------------
  ServiceObject& create_service(const std::string& name,
                                std::map<std::string, std::string> selector,
                                Routing routing);
  void delete_service(const std::string& name);
  bool has_service(const std::string& name) const;
  // Picks an endpoint per the service routing policy; nullopt when the
  // endpoint set is empty (service unavailable).
  std::optional<std::string> route_request(const std::string& service);

  // -- pod metadata ----------------------------------------------------------
  void set_label(const std::string& pod, const std::string& key, const std::string& value);
  void remove_label(const std::string& pod, const std::string& key);
  // Env changes become visible to the pod's processes after the propagation
  // latency; listeners observe the commit.
  void set_env(const std::string& pod, const std::string& key, const std::string& value);

  // -- observation -----------------------------------------------------------
  std::uint64_t watch_events(std::function<void(const ApiEvent&)> watcher);
  void unwatch(std::uint64_t subscription);
  void add_listener(ClusterListener* listener);

  const Pod* find_pod(const std::string& name) const;
  const ServiceObject* find_service(const std::string& name) const;
  const Node* find_node(const std::string& name) const;
  const std::map<std::string, Pod>& pods() const { return pods_; }
  const std::map<std::string, Node>& nodes() const { return nodes_; }
  const std::map<std::string, ServiceObject>& services() const { return services_; }
  bool has_controller(const std::string& name) const;
  // Live pods of a controller ordered by (creation_time, name).
  std::vector<std::string> pods_of(const std::string& controller) const;

 private:
  struct PendingRequest {
    std::string id;
    std::string controller;
    bool initial = false;
    bool creating = false;  // else deleting
    bool sequential = false;
    std::vector<std::string> to_process;  // names still to create/delete
    std::vector<std::string> added;
    std::vector<std::string> deleted;
    std::size_t outstanding = 0;
  };

  std::string next_request_id(const char* stem);
  std::string place_pod();
  void api_emit(ApiEventKind kind, std::vector<std::string> pods, const std::string& request);
  void notify(const std::function<void(ClusterListener&)>& fn);

  void start_creations(PendingRequest& req);
  void create_pod(const std::string& request, const std::string& name,
                  const std::string& replacement_of);
  void pod_becomes_ready(const std::string& name, const std::string& request);
  void start_deletions(PendingRequest& req);
  void begin_delete(const std::string& request, const std::string& name);
  void finish_delete(const std::string& request, const std::string& name);
  void check_request_done(const std::string& request);
  void complete_request(const std::string& request);

  void detect_container_failure(const std::string& fault, const std::string& pod);
  void repair_container(const std::string& pod);
  void evict_pod(const std::string& fault, const std::string& pod);
  void rejoin_node(const std::string& fault, const std::string& node);
  void restart_pod_in_place(const std::string& pod);

  void schedule_endpoint_refresh();
  void refresh_all_endpoints();

  Engine& engine_;
  LatencyProfile profile_;
  std::map<std::string, Node> nodes_;
  std::map<std::string, Pod> pods_;
  std::map<std::string, ServiceObject> services_;
  std::map<std::string, WorkloadControllerSpec> controllers_;
  std::map<std::string, PendingRequest> requests_;
  std::map<std::string, std::vector<std::function<void()>>> completion_callbacks_;
  std::map<std::uint64_t, std::function<void(const ApiEvent&)>> watchers_;
  std::vector<ClusterListener*> listeners_;
  std::map<std::string, std::vector<ActionHandle>> pending_evictions_;  // per node
  std::uint64_t next_watch_id_ = 1;
  std::uint64_t fault_counter_ = 0;
  std::uint64_t request_counter_ = 0;
  std::uint64_t placement_cursor_ = 0;
};

}  // namespace hasim
