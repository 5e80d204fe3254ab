#pragma once

#include <stdexcept>
#include <string>

namespace packing {

/// Input text (edge lists, JSON documents) that does not match its format.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The input graph lies outside the class a pipeline requires.
struct ClassMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Instance generation exhausted its resample budget.
struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always a bug, never bad input.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A distance violation that matches no known repair pattern. Carries a
/// JSON dump of the offending state so the failure can be inspected.
struct UnmatchedViolationError : InvariantError {
    explicit UnmatchedViolationError(const std::string& what, std::string dump = "")
        : InvariantError(what), dump_json(std::move(dump))
    {
    }

    std::string dump_json;
};

} // namespace packing
