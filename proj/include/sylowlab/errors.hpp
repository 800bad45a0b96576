#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sylowlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cycle-notation / group-file parse failures.
struct ParseError : Error {
    using Error::Error;
};

// Enumeration grew past the configured cap.
struct CapExceeded : Error {
    explicit CapExceeded(std::size_t cap_)
        : Error("enumeration cap exceeded (cap=" + std::to_string(cap_) + ")"), cap(cap_) {}
    std::size_t cap;
};

// Brute-force subnormalizer refused: group order above the budget.
struct BudgetExceeded : Error {
    BudgetExceeded(std::size_t order, std::size_t budget)
        : Error("brute-force budget exceeded (|G|=" + std::to_string(order) +
                " > " + std::to_string(budget) + ")") {}
};

struct DomainError : Error {
    using Error::Error;
};

struct NotNormalError : Error {
    NotNormalError(std::string witness_)
        : Error("subgroup is not normal; violating conjugator " + witness_),
          witness(std::move(witness_)) {}
    std::string witness;
};

struct NotPSolvableError : Error {
    explicit NotPSolvableError(unsigned p)
        : Error("group is not " + std::to_string(p) + "-solvable") {}
};

// A proven identity failed to hold: this falsifies the implementation,
// never the mathematics. Must surface loudly.
struct IdentityViolation : Error {
    using Error::Error;
};

}  // namespace sylowlab
