#pragma once

#include <stdexcept>
#include <string>

namespace semireg {

/// A cap-guarded operation would have exceeded its element or node budget.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A hypothesis of a classification or construction step failed on the input.
/// `kind` is a stable machine-readable tag; what() carries the detail.
class HypothesisViolation : public std::runtime_error {
 public:
  HypothesisViolation(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

}  // namespace semireg
