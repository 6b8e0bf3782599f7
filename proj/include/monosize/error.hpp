#pragma once

#include <stdexcept>
#include <string>

namespace monosize {

enum class ErrorCode {
    invalid_argument,   // ambient mismatch, malformed shapes
    syntax,             // text input could not be parsed
    degenerate_ideal,   // unit or zero ideal handed to an invariant computation
    cap_exceeded,       // a configured resource cap was hit
    invalid_deformation,
    internal            // an asserted identity failed
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

const char *to_string(ErrorCode code) noexcept;

} // namespace monosize
