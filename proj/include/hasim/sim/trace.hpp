#pragma once

#include <map>
#include <string>
#include <vector>

namespace hasim {

// Simulated seconds. Monotone within a run.
using SimTime = double;

enum class TraceKind {
  fault_injected,
  pod_not_ready,
  pod_ready,
  pod_created,
  pod_deleted,
  label_changed,
  env_changed,
  service_created,
  service_deleted,
  endpoints_changed,
  checkpoint_written,
  replication_delivered,
  service_resumed,
  scale_requested,
  scale_complete,
  ha_state_assigned,
  protection_lost,
  state_lost,
  note,
};

const char* to_string(TraceKind kind);

using Attrs = std::map<std::string, std::string>;

struct TraceEntry {
  SimTime t = 0.0;
  TraceKind kind = TraceKind::note;
  Attrs attrs;

  const std::string* find(const std::string& key) const;
  bool has(const std::string& key, const std::string& value) const;
};

// Ordered record of everything observable that happened during a run.
// Entries are appended in dispatch order, so timestamps never decrease.
class Trace {
 public:
  void append(SimTime t, TraceKind kind, Attrs attrs);

  const std::vector<TraceEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  // First entry at or after `from` satisfying `pred`, nullptr if none.
  template <class Pred>
  const TraceEntry* first(Pred&& pred, SimTime from = 0.0) const {
    for (const auto& e : entries_) {
      if (e.t >= from && pred(e)) return &e;
    }
    return nullptr;
  }

  template <class Pred>
  const TraceEntry* last(Pred&& pred) const {
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
      if (pred(*it)) return &*it;
    }
    return nullptr;
  }

  template <class Pred>
  std::size_t count(Pred&& pred) const {
    std::size_t n = 0;
    for (const auto& e : entries_) {
      if (pred(e)) ++n;
    }
    return n;
  }

  // Deterministic line-per-entry rendering, usable for byte comparison.
  std::string to_text() const;

 private:
  std::vector<TraceEntry> entries_;
};

// "inf" when not finite, otherwise fixed decimal with `digits` fraction digits.
std::string format_seconds(double seconds, int digits = 3);

// Compact round-trippable rendering for attribute values.
std::string format_number(double value);

}  // namespace hasim
