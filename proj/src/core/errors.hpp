#pragma once

#include <stdexcept>
#include <string>

namespace gcdsum {

// Argument outside the mathematical domain of the operation (pole, bad
// interval, nonsense parameter combination).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Structurally valid argument that exceeds what the object can answer for
// (x beyond a table limit, index past a cached range).
struct range_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Exact value requested from an operation that can only run on the real
// backend, or an exact/real mix that has no exact result.
struct backend_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Work counter passed the configured ceiling before the sum finished.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed selector, key, or value in a run configuration.
struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace gcdsum
