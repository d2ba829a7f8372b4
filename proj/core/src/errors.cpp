#include "gridups/errors.hpp"

namespace gridups {

GuardError::GuardError(int n, std::uint64_t states, std::uint64_t cap)
    : std::runtime_error("grid number " + std::to_string(n) + " has " + std::to_string(states) +
                         " states, above the guard of " + std::to_string(cap) +
                         "; raise GRIDUPS_GUARD or use a smaller diagram"),
      n_(n),
      states_(states),
      cap_(cap) {}

}  // namespace gridups
