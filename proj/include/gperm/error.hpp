#pragma once

#include <stdexcept>
#include <string>

namespace gperm {

enum class ErrorKind {
    MalformedText,
    LetterCountError,
    EmptyRow,
    NotRestrictable,
    BadPattern,
    BadParameters,
    UnknownName,
    Infeasible,
    BoundTooSmall,
    TraceBudgetExceeded,
    NotSimple,
    NotSingleCylinder,
    NoSimpleCylinderForm,
    NotFoundWithinBudget,
    SizeLimit,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace gperm
