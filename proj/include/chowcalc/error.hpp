#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chowcalc {

enum class ErrorCode {
    unsupported_dimension,
    dimension_mismatch,
    rank_mismatch,
    integrality,
    invalid_argument,
    precondition,
    inadmissible,
    not_realizable,
    io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain error raised by every library operation. The code is stable and
/// is what the command line reports in its machine-readable error object.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace chowcalc
