#pragma once

#include <stdexcept>
#include <string>

namespace jumploci {

/// Malformed or inconsistent input: bad shapes, mixed fields, unparseable data.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A mathematical hypothesis of an operation does not hold (non-flat connection,
/// missing fixed vector, ...). The message names the failed hypothesis.
struct PreconditionError : std::domain_error {
    using std::domain_error::domain_error;
};

/// The operation needs structure the input does not carry (e.g. weights).
struct UnsupportedError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace jumploci
