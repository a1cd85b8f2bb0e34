#pragma once

#include <stdexcept>
#include <string>

namespace locus {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input documents: bad XML, unsupported commands, dangling
// references, the i2g double-definition defect.
struct ParseError : Error {
    using Error::Error;
};

// A computation hit its configured step budget. Never silent truncation.
struct ResourceError : Error {
    using Error::Error;
};

// Construction is structurally valid but semantically unusable for the
// requested task (no locus element, contradictory hypotheses, ...).
struct InconsistentError : Error {
    using Error::Error;
};

// Violated precondition or internal invariant.
struct InvalidArgument : Error {
    using Error::Error;
};

} // namespace locus
