#pragma once

#include <stdexcept>
#include <string>

namespace cliquecover {

// Thrown when a configured size cap or search budget would be exceeded.
// Carries enough text to tell the caller which knob to raise.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cliquecover
