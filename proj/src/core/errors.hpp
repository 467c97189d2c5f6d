#ifndef PRM_CORE_ERRORS_HPP
#define PRM_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prm {

// Shape/modulus disagreements between operands.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Parameter outside the mathematically meaningful range.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An exact computation would exceed the configured enumeration budget.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace prm

#endif
