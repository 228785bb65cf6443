#pragma once

#include <stdexcept>
#include <string>

namespace binterp {

/// Base of every exception thrown by binterp.
class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class parse_error : public error {
   public:
    using error::error;
};

/// An operation that needs h != 0 (or 1 - h != 0) was handed a singular parameter.
class degenerate_operator : public error {
   public:
    using error::error;
};

/// A precondition on the arguments was violated.
class invalid_argument : public error {
   public:
    using error::error;
};

/// Unknown catalog or identity key.
class unknown_key : public error {
   public:
    using error::error;
};

}  // namespace binterp
