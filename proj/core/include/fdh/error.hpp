#ifndef FDH_ERROR_HPP_
#define FDH_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fdh {

enum class ErrorCode {
  kNonpositiveValue,
  kDuplicateName,
  kEmptyDataset,
  kRaggedRows,
  kIndexOutOfRange,
  kDimensionMismatch,
  kInvalidArgument,
  kInefficientUnit,
  kUnclassifiable,
  kOutOfDomain,
  kParseError,
  kNoInputColumns,
  kNoOutputColumns,
  kIoError,
};

// Stable upper-case identifier, e.g. "NONPOSITIVE_VALUE".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fdh

#endif  // FDH_ERROR_HPP_
