#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgclass {

/// Checked 64-bit arithmetic left the representable range.
class ArithmeticOverflow : public std::overflow_error {
public:
    ArithmeticOverflow() : std::overflow_error("64-bit integer overflow") {}
    explicit ArithmeticOverflow(const std::string& what) : std::overflow_error(what) {}
};

/// A reachability table would need more cells than the configured budget.
class BoxBudgetExceeded : public std::runtime_error {
public:
    BoxBudgetExceeded(std::int64_t cells, std::int64_t budget)
        : std::runtime_error("membership table needs " + std::to_string(cells) +
                             " cells, budget is " + std::to_string(budget)),
          cells(cells), budget(budget) {}
    std::int64_t cells;
    std::int64_t budget;
};

/// No multiple of a non-extremal generator landed in the free extremal span
/// within the configured search bound.
class LBoundExceeded : public std::runtime_error {
public:
    explicit LBoundExceeded(std::int64_t l_max)
        : std::runtime_error("no span multiple found up to l_max = " + std::to_string(l_max)) {}
};

class NotAperyElement : public std::invalid_argument {
public:
    NotAperyElement() : std::invalid_argument("vector is not an Apery element") {}
};

class NotCohenMacaulay : public std::logic_error {
public:
    NotCohenMacaulay() : std::logic_error("operation requires a Cohen-Macaulay semigroup") {}
};

class NotInSemigroup : public std::invalid_argument {
public:
    NotInSemigroup() : std::invalid_argument("vector is not an element of the semigroup") {}
};

/// A structural fact that provably holds for every valid input failed to hold.
/// Seeing this means the implementation is wrong, never the input.
class InternalInvariantViolation : public std::logic_error {
public:
    explicit InternalInvariantViolation(const std::string& what)
        : std::logic_error("internal invariant violated: " + what) {}
};

/// Resource limits shared by every computation that can grow with the input.
struct Limits {
    std::int64_t l_max = 10000;
    std::int64_t box_budget = 100'000'000;
};

} // namespace sgclass
