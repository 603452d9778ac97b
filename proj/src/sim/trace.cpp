#include "hasim/sim/trace.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hasim {

const char* to_string(TraceKind kind) {
  switch (kind) {
    case TraceKind::fault_injected: return "fault_injected";
    case TraceKind::pod_not_ready: return "pod_not_ready";
    case TraceKind::pod_ready: return "pod_ready";
    case TraceKind::pod_created: return "pod_created";
    case TraceKind::pod_deleted: return "pod_deleted";
    case TraceKind::label_changed: return "label_changed";
    case TraceKind::env_changed: return "env_changed";
    case TraceKind::service_created: return "service_created";
    case TraceKind::service_deleted: return "service_deleted";
    case TraceKind::endpoints_changed: return "endpoints_changed";
    case TraceKind::checkpoint_written: return "checkpoint_written";
    case TraceKind::replication_delivered: return "replication_delivered";
    case TraceKind::service_resumed: return "service_resumed";
    case TraceKind::scale_requested: return "scale_requested";
    case TraceKind::scale_complete: return "scale_complete";
    case TraceKind::ha_state_assigned: return "ha_state_assigned";
    case TraceKind::protection_lost: return "protection_lost";
    case TraceKind::state_lost: return "state_lost";
    case TraceKind::note: return "note";
  }
  return "unknown";
}

const std::string* TraceEntry::find(const std::string& key) const {
  auto it = attrs.find(key);
  return it == attrs.end() ? nullptr : &it->second;
}

bool TraceEntry::has(const std::string& key, const std::string& value) const {
  const std::string* v = find(key);
  return v != nullptr && *v == value;
}

void Trace::append(SimTime t, TraceKind kind, Attrs attrs) {
  assert(entries_.empty() || t >= entries_.back().t);
  entries_.push_back(TraceEntry{t, kind, std::move(attrs)});
}

std::string Trace::to_text() const {
  std::ostringstream out;
  char stamp[32];
  for (const auto& e : entries_) {
    std::snprintf(stamp, sizeof(stamp), "%.9f", e.t);
    out << stamp << ' ' << to_string(e.kind);
    for (const auto& [k, v] : e.attrs) {
      out << ' ' << k << '=' << v;
    }
    out << '\n';
  }
  return out.str();
}

std::string format_seconds(double seconds, int digits) {
  if (std::isinf(seconds) || std::isnan(seconds)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, seconds);
  return buf;
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

}  // namespace hasim
