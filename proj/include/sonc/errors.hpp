#pragma once

#include <stdexcept>
#include <string>

namespace sonc {

// Base class for all library errors.
class SoncError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatchError : public SoncError {
public:
    using SoncError::SoncError;
};

// Thrown when a vertex enumeration would exceed the configured cap.
class DimensionTooLargeError : public SoncError {
public:
    using SoncError::SoncError;
};

class DimensionTooSmallError : public SoncError {
public:
    using SoncError::SoncError;
};

class PolyParseError : public SoncError {
public:
    PolyParseError(const std::string& message, std::size_t position)
        : SoncError(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

enum class CircuitDefect {
    NotASimplex,
    VertexNotEven,
    InnerNotStrictlyInterior,
    TooManyInnerTerms,
    NegativeOuterCoefficient,
    NoInnerTerm,
};

inline const char* to_string(CircuitDefect d) {
    switch (d) {
        case CircuitDefect::NotASimplex: return "NotASimplex";
        case CircuitDefect::VertexNotEven: return "VertexNotEven";
        case CircuitDefect::InnerNotStrictlyInterior: return "InnerNotStrictlyInterior";
        case CircuitDefect::TooManyInnerTerms: return "TooManyInnerTerms";
        case CircuitDefect::NegativeOuterCoefficient: return "NegativeOuterCoefficient";
        case CircuitDefect::NoInnerTerm: return "NoInnerTerm";
    }
    return "UnknownDefect";
}

class CircuitError : public SoncError {
public:
    CircuitError(CircuitDefect defect, const std::string& detail)
        : SoncError(std::string(to_string(defect)) + ": " + detail), defect_(defect) {}

    CircuitDefect defect() const { return defect_; }

private:
    CircuitDefect defect_;
};

class NotAVertexError : public SoncError {
public:
    using SoncError::SoncError;
};

class DoesNotVanishError : public SoncError {
public:
    using SoncError::SoncError;
};

// Carries the offending vertex index (enumeration mask) as a witness.
class NegativeOnFeasibleVertexError : public SoncError {
public:
    NegativeOnFeasibleVertexError(const std::string& message, unsigned long long vertex_mask)
        : SoncError(message), vertex_mask_(vertex_mask) {}

    unsigned long long vertex_mask() const { return vertex_mask_; }

private:
    unsigned long long vertex_mask_;
};

class NoViolatedConstraintError : public SoncError {
public:
    using SoncError::SoncError;
};

class JsonFormatError : public SoncError {
public:
    using SoncError::SoncError;
};

}  // namespace sonc
