#pragma once

#include <stdexcept>
#include <string>

namespace spanlab {

// Base for everything thrown on purpose by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller broke a documented precondition (bad vertex id, non-total labeling,
// invalid decomposition, ...).  The CLI maps this to exit code 2.
class ContractError : public Error {
public:
    explicit ContractError(const std::string& msg) : Error(msg) {}
};

// A solver was handed a disconnected graph.  Construction of disconnected
// graphs is fine; the solvers are the ones that refuse them.
class DisconnectedError : public ContractError {
public:
    explicit DisconnectedError(const std::string& msg) : ContractError(msg) {}
};

// A configured cap or budget was exceeded.  The instance may well be solvable
// with a larger budget; this is a refusal, not a verdict.  CLI exit code 3.
class Refusal : public Error {
public:
    explicit Refusal(const std::string& msg) : Error(msg) {}
};

} // namespace spanlab
