#include <gpring/error.hpp>

namespace gpring {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::EmptyRootSet: return "EmptyRootSet";
    case ErrorKind::NotSinglyRooted: return "NotSinglyRooted";
    case ErrorKind::LoopsNotAllowed: return "LoopsNotAllowed";
    case ErrorKind::UnsupportedDomain: return "UnsupportedDomain";
    case ErrorKind::FactorizationNotUnique: return "FactorizationNotUnique";
    case ErrorKind::RegistryMismatch: return "RegistryMismatch";
    case ErrorKind::VariantMismatch: return "VariantMismatch";
    case ErrorKind::IncomparableVariant: return "IncomparableVariant";
    case ErrorKind::NoRoot: return "NoRoot";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::TruncationExceeded: return "TruncationExceeded";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), m_kind(kind)
{
}

void fail(ErrorKind kind, const std::string &message)
{
    throw Error(kind, message);
}

} // namespace gpring
