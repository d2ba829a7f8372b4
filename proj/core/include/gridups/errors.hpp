#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gridups {

// Invalid input or a violated precondition (bad grid text, illegal move, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The n! state count of a diagram exceeds the configured cap.
class GuardError : public std::runtime_error {
 public:
  GuardError(int n, std::uint64_t states, std::uint64_t cap);

  int grid_number() const { return n_; }
  std::uint64_t states() const { return states_; }
  std::uint64_t cap() const { return cap_; }

 private:
  int n_;
  std::uint64_t states_;
  std::uint64_t cap_;
};

// An internal consistency check failed. Never expected on valid input.
class EngineDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gridups
