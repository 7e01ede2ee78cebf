#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace arcstab {

/// Malformed or inconsistent input. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text that does not follow the polynomial grammar.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A computation ran out of its step budget. The CLI maps this to exit code 3.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Step counter shared by Groebner reductions and simplex pivots.
class Budget {
 public:
  static constexpr std::uint64_t kDefaultSteps = 200000;

  explicit Budget(std::uint64_t limit = kDefaultSteps) : limit_(limit) {}

  void step(const char* what) {
    if (++used_ > limit_) {
      throw BudgetExceeded(std::string("step budget of ") + std::to_string(limit_) +
                           " exhausted in " + what);
    }
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace arcstab
