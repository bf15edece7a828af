#include "cotan/error.hpp"

namespace cotan {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SimpleGraphRequired: return "SimpleGraphRequired";
    case ErrorKind::NameCollision: return "NameCollision";
    case ErrorKind::NotASeparationPair: return "NotASeparationPair";
    case ErrorKind::CapExceeded: return "DegreeCapExceeded";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::TriangleFound: return "TriangleFound";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Io: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

bool Error::is_precondition() const
{
    switch (kind_) {
    case ErrorKind::SimpleGraphRequired:
    case ErrorKind::CapExceeded:
    case ErrorKind::PreconditionViolated:
    case ErrorKind::TriangleFound:
        return true;
    default:
        return false;
    }
}

}  // namespace cotan
