#pragma once

#include <stdexcept>
#include <string>

namespace kleinzeta {

// Raised when a requested computation exceeds a configured size budget.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when persisted data fails validation on reload.
class integrity_error : public std::runtime_error {
 public:
  explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

}
