#pragma once

#include <stdexcept>
#include <string>

namespace cgm {

enum class errc {
  ok = 0,
  invalid_argument,
  wrong_length,
  negative_entry,
  not_in_monoid,
  modulus_mismatch,
  part_sum_not_multiple,
  not_a_unit,
  trivial_solution,
  resource_limit,
  scale_exceeded,
  below_threshold,
  too_many_parts,
  part_too_large,
  wrong_sum,
  not_action_closed,
  support_mismatch,
  out_of_range,
  internal,
};

/// Library error carrying a stable code alongside the message.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

}  // namespace cgm
