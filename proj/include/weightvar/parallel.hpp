#pragma once

#include <exception>
#include <mutex>

namespace weightvar {

/// Selects between the OpenMP kernel and its serial reference twin. Both
/// produce identical, deterministically ordered results.
enum class Exec { Serial, Parallel };

/// Collects the first exception thrown inside an OpenMP region so it can be
/// rethrown after the region ends.
class ExceptionSlot {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

}  // namespace weightvar
