#include "chowcalc/error.hpp"

namespace chowcalc {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::unsupported_dimension: return "unsupported_dimension";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::rank_mismatch: return "rank_mismatch";
    case ErrorCode::integrality: return "integrality";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::inadmissible: return "inadmissible";
    case ErrorCode::not_realizable: return "not_realizable";
    case ErrorCode::io: return "io";
    }
    return "unknown";
}

} // namespace chowcalc
