#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ohasse {

// Operands live over different coefficient domains.
struct DomainMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Res(0, 0).
struct UndefinedResultant : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input was expected in a canonical form (monic, reduced, ...) and is not.
struct NormalizationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The two forms of a map share a root, so they do not define a morphism.
struct DegenerateMap : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Unsupported : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A hypothesis of the requested computation is not satisfied by the input.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The map is inseparable (its Wronskian vanishes) where a separable map is required.
struct InseparableMap : PreconditionError {
    using PreconditionError::PreconditionError;
};

// Lemma hypotheses on the shape of the input (too few factors, repeated
// factors). Reported as usage errors by the command line tool.
struct HypothesisNotMet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Something that is a theorem turned out false on this run. Always a bug.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace ohasse
