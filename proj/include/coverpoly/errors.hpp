#pragma once

#include <stdexcept>
#include <string>

namespace coverpoly {

/// Malformed input: unparseable files, unknown variables, loops in an edge list.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The input parses but violates a structural precondition (not a cactus,
/// overlapping reachability sets, a factor without a cover triple, ...).
class StructuralError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed one of the explicit size budgets.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace coverpoly
