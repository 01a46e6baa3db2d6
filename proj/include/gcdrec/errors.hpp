#pragma once

#include <stdexcept>
#include <string>

namespace gcdrec {

// Invalid argument or configuration (violated operation precondition).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// A value left the configured fixed-width envelope. Carries the index at
// which the evolution overflowed when known (0 otherwise).
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what, unsigned long long index = 0)
      : std::runtime_error(what), index_(index) {}
  unsigned long long index() const { return index_; }

 private:
  unsigned long long index_;
};

// Factor search gave up before finding a factor (effort cap reached).
class FactorEffortError : public OverflowError {
 public:
  explicit FactorEffortError(const std::string& what) : OverflowError(what) {}
};

// Terminal dynamical condition: from the given state every later gcd is 1,
// so no next nontrivial event exists (a(n) = n + 2 and a(n) = n tails).
class NoNontrivialGcd : public std::runtime_error {
 public:
  explicit NoNontrivialGcd(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gcdrec
