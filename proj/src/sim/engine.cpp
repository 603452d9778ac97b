#include "hasim/sim/engine.hpp"

#include <stdexcept>

namespace hasim {

ActionHandle Engine::schedule(double delay, std::function<void()> action) {
  if (delay < 0.0) throw std::invalid_argument("Engine::schedule: negative delay");
  return schedule_at(now_ + delay, std::move(action));
}

ActionHandle Engine::schedule_at(SimTime fire_at, std::function<void()> action) {
  if (fire_at < now_) throw std::invalid_argument("Engine::schedule_at: time in the past");
  auto item = std::make_shared<detail::ScheduledAction>();
  item->fire_at = fire_at;
  item->seq = next_seq_++;
  item->fn = std::move(action);
  queue_.push(item);
  return ActionHandle(item);
}

bool Engine::cancel(const ActionHandle& handle) {
  if (!handle.item_) return false;
  if (handle.item_->fired || handle.item_->cancelled) return false;
  handle.item_->cancelled = true;
  return true;
}

bool Engine::dispatch_next() {
  while (!queue_.empty()) {
    Item item = queue_.top();
    queue_.pop();
    if (item->cancelled) continue;
    now_ = item->fire_at;
    item->fired = true;
    item->fn();
    return true;
  }
  return false;
}

const Trace& Engine::run_until(SimTime stop) {
  while (!stop_requested_ && !queue_.empty()) {
    // Skip over cancelled entries without advancing time.
    if (queue_.top()->cancelled) {
      queue_.pop();
      continue;
    }
    if (queue_.top()->fire_at > stop) break;
    dispatch_next();
  }
  if (!stop_requested_ && stop > now_) now_ = stop;
  return trace_;
}

const Trace& Engine::run_to_quiescence() {
  while (!stop_requested_ && dispatch_next()) {
  }
  return trace_;
}

std::size_t Engine::pending_actions() const {
  return queue_.size();
}

void Engine::emit(TraceKind kind, Attrs attrs) {
  trace_.append(now_, kind, std::move(attrs));
}

}  // namespace hasim
