#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zqr {

enum class ErrorKind {
    InvalidRing,
    InvalidAutomorphism,
    InvalidLambda,
    LengthMismatch,
    ContextMismatch,
    NonUnitLeadingCoeff,
    DivisionByZeroPoly,
    EnumerationCapExceeded,
    UnsupportedVariant,
    LengthNotDivisible,
    GeneratorNotDivisor,
    NotAParityCheck,
    ZeroCode,
    ParseError,
    ManifestMissing,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidRing: return "InvalidRing";
        case ErrorKind::InvalidAutomorphism: return "InvalidAutomorphism";
        case ErrorKind::InvalidLambda: return "InvalidLambda";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::ContextMismatch: return "ContextMismatch";
        case ErrorKind::NonUnitLeadingCoeff: return "NonUnitLeadingCoeff";
        case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
        case ErrorKind::UnsupportedVariant: return "UnsupportedVariant";
        case ErrorKind::LengthNotDivisible: return "LengthNotDivisible";
        case ErrorKind::GeneratorNotDivisor: return "GeneratorNotDivisor";
        case ErrorKind::NotAParityCheck: return "NotAParityCheck";
        case ErrorKind::ZeroCode: return "ZeroCode";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ManifestMissing: return "ManifestMissing";
    }
    return "Unknown";
}

/// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Default enumeration caps (number of candidates or codewords).
inline constexpr std::uint64_t kDefaultDivisorCap = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kDefaultDualCap = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kDefaultCodewordCap = std::uint64_t{1} << 26;

inline void check_cap(std::uint64_t needed, std::uint64_t cap, std::string_view what) {
    if (needed > cap) {
        throw Error(ErrorKind::EnumerationCapExceeded,
                    std::string(what) + " needs " + std::to_string(needed) + " > cap " + std::to_string(cap));
    }
}

/// Saturating integer power, used to size enumerations before running them.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

}  // namespace zqr
