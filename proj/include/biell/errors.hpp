#pragma once

#include <stdexcept>
#include <string>

namespace biell {

/// Violated operation precondition; the message names the precondition.
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace biell
