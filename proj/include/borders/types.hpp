#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace borders {

/// Array entries. Signed because strict border arrays use -1.
using Value = std::int64_t;

/// Letters are small positive integers; 0 means "no letter".
using Symbol = std::uint32_t;

/// A word as a sequence of symbol identifiers.
using Word = std::vector<Symbol>;

enum class ErrorCode {
    InvalidBorderArray,
    LengthTooLarge,
    PushAfterFailure,
    StateInvalid,
    OutOfRange,
    CapacityViolation,
    CopyDeadline,
    Parse,
    Usage,
    Io,
};

class BorderError : public std::runtime_error {
public:
    BorderError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Outcome of pushing one value into a streaming validator.
///
/// Positions are 1-based. For a valid verdict `position` is the position of
/// the value just accepted; for an invalid one it is the rejected position.
struct Verdict {
    bool valid = true;
    std::size_t position = 0;
    std::size_t alphabet = 0;  // minimal alphabet of the accepted prefix
    Symbol letter = 0;         // witness letter at `position`, 0 if not known

    static Verdict accept(std::size_t pos, std::size_t alph, Symbol letter) {
        return {true, pos, alph, letter};
    }
    static Verdict reject(std::size_t pos) { return {false, pos, 0, 0}; }
};

}  // namespace borders
