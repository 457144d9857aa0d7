#ifndef PDM_ERRORS_HPP
#define PDM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pdm {

// Numerical routine failed to reach its tolerance or produced a non-finite
// result. Carries the best value obtained so the caller can still inspect it.
class numerical_error : public std::runtime_error {
 public:
  numerical_error(const std::string& what, double best_estimate,
                  double error_estimate)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate) {}

  double best_estimate() const { return best_estimate_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

// Requested an operation outside a component's modeling domain, e.g. an exact
// interior solution for the bare (uncorrected) potential.
class unsupported_mode_error : public std::logic_error {
 public:
  explicit unsupported_mode_error(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace pdm

#endif
