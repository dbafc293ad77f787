// errors.hpp - exception types shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace csale {

/// No arm set of the decision class satisfies the requested constraints
/// where the caller required one to exist.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The run reached a state its decision class should have made impossible,
/// e.g. no remaining cardinality slack while the accepted set is not valid.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive computation was asked to run on an instance above its size limit.
class SizeGuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

class RetriesExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace csale
