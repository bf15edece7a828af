#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cotan {

enum class ErrorKind {
    EmptyGraph,
    UnknownVertex,
    InvalidArgument,
    SimpleGraphRequired,
    NameCollision,
    NotASeparationPair,
    CapExceeded,
    PreconditionViolated,
    TriangleFound,
    Parse,
    Io,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const { return kind_; }

    // Mathematical preconditions (loops, triangles, caps) as opposed to
    // malformed input.
    bool is_precondition() const;

private:
    ErrorKind kind_;
};

}  // namespace cotan
