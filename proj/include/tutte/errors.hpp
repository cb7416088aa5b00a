#pragma once

#include <stdexcept>
#include <string>

namespace tutte {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual const char* kind() const { return "Error"; }
};

#define TUTTE_ERROR(Name)                                                 \
    struct Name : Error {                                                 \
        explicit Name(const std::string& msg) : Error(msg) {}             \
        const char* kind() const override { return #Name; }               \
    }

// series kernel
TUTTE_ERROR(ConstantTermViolation);
TUTTE_ERROR(DivisibilityError);
TUTTE_ERROR(ValuationError);
TUTTE_ERROR(NonContractive);
TUTTE_ERROR(NonIntegerCount);

// graphs and decompositions
TUTTE_ERROR(EmptyGraph);
TUTTE_ERROR(NotConnected);
TUTTE_ERROR(NotTwoConnected);
TUTTE_ERROR(TooFewEdges);
TUTTE_ERROR(UnknownVertex);
TUTTE_ERROR(InvalidTree);
TUTTE_ERROR(InvalidGraph);

// oracle / cli
TUTTE_ERROR(SizeLimit);
TUTTE_ERROR(ConflictingFlags);

#undef TUTTE_ERROR

} // namespace tutte
