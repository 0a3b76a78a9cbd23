#pragma once

#include <stdexcept>
#include <string>

namespace monolab {

// Input exceeds the supported desk scale (explicit tables, exact search).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition was violated (bad cover, duplicate oracle values).
class ContractError : public std::runtime_error {
public:
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace monolab
