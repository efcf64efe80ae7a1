#include "error.hpp"

namespace papi {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::dimension: return "dimension";
    case ErrorCode::degenerate: return "degenerate";
    case ErrorCode::distribution: return "distribution";
    case ErrorCode::numeric: return "numeric";
    case ErrorCode::parse: return "parse";
    case ErrorCode::integrity: return "integrity";
    case ErrorCode::io: return "io";
    }
    return "unknown";
}

} // namespace papi
