#pragma once

#include <stdexcept>
#include <string>

namespace edgering {

/// Malformed input document (bad JSON, loop edge, duplicate edge, ...).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An exact computation was declined because a configured resource bound
/// (generator count, subset cutoff, search box, variable count) was exceeded.
/// Never a silent pass: callers surface this as an explicit "refused" status.
struct refused_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace edgering
