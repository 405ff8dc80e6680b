#include "fdh/error.hpp"

namespace fdh {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonpositiveValue: return "NONPOSITIVE_VALUE";
    case ErrorCode::kDuplicateName: return "DUPLICATE_NAME";
    case ErrorCode::kEmptyDataset: return "EMPTY_DATASET";
    case ErrorCode::kRaggedRows: return "RAGGED_ROWS";
    case ErrorCode::kIndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::kDimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kInefficientUnit: return "INEFFICIENT_UNIT";
    case ErrorCode::kUnclassifiable: return "UNCLASSIFIABLE";
    case ErrorCode::kOutOfDomain: return "OUT_OF_DOMAIN";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kNoInputColumns: return "NO_INPUT_COLUMNS";
    case ErrorCode::kNoOutputColumns: return "NO_OUTPUT_COLUMNS";
    case ErrorCode::kIoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
      code_(code) {}

}  // namespace fdh
