#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybx {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed tables, JSON or arguments.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// A closure would exceed the node or length budget.
class ResourceLimit : public Error {
public:
    ResourceLimit(const std::string& what, int length, std::size_t required, std::size_t budget)
        : Error(what), length(length), required(required), budget(budget) {}
    int length;
    std::size_t required;
    std::size_t budget;
};

// Generator input fails its defining axioms; witness holds the offending elements.
class AxiomViolation : public Error {
public:
    AxiomViolation(const std::string& what, std::vector<int> witness)
        : Error(what), witness(std::move(witness)) {}
    std::vector<int> witness;
};

class NotClosed : public Error {
public:
    NotClosed(const std::string& what, int x, int y) : Error(what), x(x), y(y) {}
    int x, y;
};

// Raised when an identity that must hold for every solution fails.
class InconsistentSolution : public Error {
public:
    using Error::Error;
};

class PreconditionUnmet : public Error {
public:
    using Error::Error;
};

class IllDefined : public Error {
public:
    using Error::Error;
};

// A theorem-backed cross-check disagreed with computation.
class CrossCheckFailure : public Error {
public:
    using Error::Error;
};

}  // namespace ybx
