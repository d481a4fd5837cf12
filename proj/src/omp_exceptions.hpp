#pragma once

#include <cstdint>
#include <exception>
#include <limits>

namespace fredholm::detail {

/// Carries an exception out of an OpenMP loop. When several iterations
/// throw, the one with the smallest loop index wins, so the error a caller
/// sees does not depend on scheduling.
class LoopExceptions {
 public:
  void capture(std::int64_t index) noexcept {
#pragma omp critical(fredholm_loop_exceptions)
    {
      if (index < index_) {
        index_ = index;
        error_ = std::current_exception();
      }
    }
  }

  void rethrow_if_any() const {
    if (error_) {
      std::rethrow_exception(error_);
    }
  }

 private:
  std::int64_t index_ = std::numeric_limits<std::int64_t>::max();
  std::exception_ptr error_;
};

}  // namespace fredholm::detail
