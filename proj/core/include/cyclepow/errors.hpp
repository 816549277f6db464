#ifndef CYCLEPOW_ERRORS_HPP
#define CYCLEPOW_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclepow {

/// The requested quantity lies outside the regime where its formula is valid.
class out_of_regime_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exhaustive enumeration would exceed the configured subset budget.
class budget_exceeded_error : public std::runtime_error {
 public:
  budget_exceeded_error(std::uint64_t projected, std::uint64_t budget)
      : std::runtime_error("enumeration budget exceeded: " +
                           std::to_string(projected) +
                           " subsets projected, budget is " +
                           std::to_string(budget)),
        projected_subsets(projected),
        budget(budget) {}

  std::uint64_t projected_subsets;
  std::uint64_t budget;
};

/// Dense verification helpers are restricted to small instances.
class verification_scope_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace cyclepow

#endif  // CYCLEPOW_ERRORS_HPP
