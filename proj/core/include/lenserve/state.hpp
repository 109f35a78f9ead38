#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>

#include "lenserve/container.hpp"
#include "lenserve/value.hpp"

namespace lenserve {

// Interprets a position (a diff) at a shape value as a new shape value.
struct ActionFamily {
  using Act = std::function<Value(const Value& state, const Value& diff)>;

  Container container;
  Act act;
};

// act v p = p. Positions of a Const container are whole replacement states.
ActionFamily act_const(const Schema& s);
// act (s1, s2) (p1, p2) = (act s1 p1, act s2 p2)
ActionFamily act_tensor(const ActionFamily& a, const ActionFamily& b);
// act (Left s) p = Left (act s p), likewise Right.
ActionFamily act_sum(const ActionFamily& a, const ActionFamily& b);
// act (s1, s2) (Left x) = (act s1 x, s2); act (s1, s2) (Right x) = (s1, act s2 x)
ActionFamily act_product(const ActionFamily& a, const ActionFamily& b);
// Unit positions carry no information: act v () = v.
ActionFamily act_unit_positions(const Schema& s);

// Builds the action of a container from how it was assembled. Throws
// ConfigurationError naming the first sub-container that has none.
ActionFamily derive_action(const Container& c);

// A diff at v that the derived action maps back to v, when one exists.
std::optional<Value> stationary_diff(const Container& c, const Value& v);
bool has_stationary_diff(const Container& c);

// Initial state: Unit, false, 0, "", pairs of defaults, Inl of the left
// default, empty lists and maps, the literal itself for singleton strings.
Value default_value(const Schema& s);

// The engine's only mutable object. Reads may run concurrently; transactions
// run one at a time and either commit a conforming state or leave it as is.
class StateCell {
 public:
  explicit StateCell(ActionFamily action);
  StateCell(ActionFamily action, Value initial);

  StateCell(const StateCell&) = delete;
  StateCell& operator=(const StateCell&) = delete;

  const Container& container() const noexcept { return action_.container; }
  const Value& initial() const noexcept { return initial_; }

  Value snapshot() const;

  // Applies diff to the current state. The diff must conform to the position
  // schema at the current state; otherwise ContractViolation and no change.
  void apply_diff(const Value& diff);

  // Runs fn on the current state under the write lock and applies the diff
  // it returns. Exceptions from fn leave the state untouched.
  template <typename Fn>
  auto transact(Fn&& fn) {
    std::unique_lock lock(mutex_);
    auto [result, diff] = fn(static_cast<const Value&>(current_));
    apply_locked(diff);
    return result;
  }

  // Replaces the whole state (snapshot loading). Throws ContractViolation if
  // v does not conform to the shape.
  void reset(Value v);

 private:
  void apply_locked(const Value& diff);

  ActionFamily action_;
  Value initial_;
  Value current_;
  mutable std::shared_mutex mutex_;
};

}  // namespace lenserve
