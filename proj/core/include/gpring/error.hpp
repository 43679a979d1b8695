#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpring {

enum class ErrorKind {
    InvalidGraph,
    ParseError,
    SizeLimitExceeded,
    EmptyRootSet,
    NotSinglyRooted,
    LoopsNotAllowed,
    UnsupportedDomain,
    FactorizationNotUnique,
    RegistryMismatch,
    VariantMismatch,
    IncomparableVariant,
    NoRoot,
    NotDivisible,
    ZeroDivisor,
    TruncationExceeded,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures surface as this exception; callers dispatch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept { return m_kind; }

private:
    ErrorKind m_kind;
};

[[noreturn]] void fail(ErrorKind kind, const std::string &message);

} // namespace gpring
