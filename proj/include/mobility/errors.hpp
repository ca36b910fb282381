#pragma once

#include <stdexcept>
#include <string>

namespace mobility {

/// Machine-readable failure codes surfaced by library operations.
enum class Errc {
    LengthMismatch,
    TooSmall,
    NonFinite,
    NonPositiveForLog,
    DegenerateOrigin,
    DegenerateVariance,
    ZeroDenominator,
    NonPositiveIncome,
    NonPositiveOrigin,
    BadAlpha,
    BadAlphaTilde,
    DomainError,
    EvenGamma,
    NegativeGamma,
    ZeroMean,
    DegeneratePartition,
    UnknownGroupId,
    MissingHeader,
    BadNumber,
    DuplicateId,
    BadArguments,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Errc code() const noexcept { return code_; }
    const char* code_name() const noexcept { return errc_name(code_); }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace mobility
