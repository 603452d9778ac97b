#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <queue>
#include <vector>

#include "hasim/sim/random.hpp"
#include "hasim/sim/trace.hpp"

namespace hasim {

namespace detail {
struct ScheduledAction {
  SimTime fire_at = 0.0;
  std::uint64_t seq = 0;
  std::function<void()> fn;
  bool cancelled = false;
  bool fired = false;
};
}  // namespace detail

// Cancellable reference to a scheduled action.
class ActionHandle {
 public:
  ActionHandle() = default;
  bool valid() const { return static_cast<bool>(item_); }

 private:
  friend class Engine;
  explicit ActionHandle(std::shared_ptr<detail::ScheduledAction> item)
      : item_(std::move(item)) {}
  std::shared_ptr<detail::ScheduledAction> item_;
};

// Single-timeline discrete-event core: the simulated clock, (fire_at, seq)
// ordered dispatch, the run's trace and its random source. One engine per
// run; independent runs never share state.
class Engine {
 public:
  explicit Engine(std::uint64_t seed = 0) : rng_(seed) {}

  SimTime now() const { return now_; }
  Trace& trace() { return trace_; }
  const Trace& trace() const { return trace_; }
  RandomSource& rng() { return rng_; }

  // Registers `action` to fire at now + delay. Ties at equal fire time are
  // dispatched in scheduling order. Negative delay is a validation error.
  ActionHandle schedule(double delay, std::function<void()> action);
  ActionHandle schedule_at(SimTime fire_at, std::function<void()> action);

  // True if the action had not fired and is removed now; false otherwise.
  bool cancel(const ActionHandle& handle);

  // Dispatches every action with fire_at <= stop, then advances the clock to
  // `stop` (unless a stop was requested mid-run). Returns the trace so far.
  const Trace& run_until(SimTime stop);

  // Dispatches until the queue is empty or a stop is requested.
  const Trace& run_to_quiescence();

  // Halts the run after the currently dispatching action returns.
  void request_stop() { stop_requested_ = true; }
  bool stop_requested() const { return stop_requested_; }

  std::size_t pending_actions() const;

  // Appends a trace entry stamped with the current simulated time.
  void emit(TraceKind kind, Attrs attrs = {});

 private:
  using Item = std::shared_ptr<detail::ScheduledAction>;
  struct Later {
    bool operator()(const Item& a, const Item& b) const {
      if (a->fire_at != b->fire_at) return a->fire_at > b->fire_at;
      return a->seq > b->seq;
    }
  };

  bool dispatch_next();

  SimTime now_ = 0.0;
  std::uint64_t next_seq_ = 0;
  std::priority_queue<Item, std::vector<Item>, Later> queue_;
  bool stop_requested_ = false;
  Trace trace_;
  RandomSource rng_;
};

}  // namespace hasim
