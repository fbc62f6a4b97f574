#ifndef APSK_ERROR_HPP
#define APSK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace apsk {

enum class ErrorCode {
    kNonDivisor,       // subset count does not divide the constellation size
    kZero,             // empty or too-small constellation requested
    kUnsupportedM,     // no grid layout defined for this QAM size
    kSameIndex,        // pairwise term requested for identical indices
    kQuadNonconverged, // node-doubling refinement failed to settle
    kEmptySeries,      // plot requested with no data
    kBadConfig,        // config file rejected (schema, types, unknown keys)
    kIoError,          // file read/write failure
    kInvalidArgument,  // precondition violated
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kNonDivisor: return "NON_DIVISOR";
        case ErrorCode::kZero: return "ZERO";
        case ErrorCode::kUnsupportedM: return "UNSUPPORTED_M";
        case ErrorCode::kSameIndex: return "SAME_INDEX";
        case ErrorCode::kQuadNonconverged: return "QUAD_NONCONVERGED";
        case ErrorCode::kEmptySeries: return "EMPTY_SERIES";
        case ErrorCode::kBadConfig: return "BAD_CONFIG";
        case ErrorCode::kIoError: return "IO_ERROR";
        case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    }
    return "UNKNOWN";
}

} // namespace apsk

#endif
