#ifndef FDH_TESTS_ERROR_CODE_HPP_
#define FDH_TESTS_ERROR_CODE_HPP_

#include <functional>

#include <gtest/gtest.h>

#include "fdh/error.hpp"

namespace fdh::testing {

// Code of the fdh::Error thrown by f; records a failure if nothing is thrown.
inline ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no fdh::Error thrown";
  return ErrorCode::kIoError;
}

}  // namespace fdh::testing

#endif  // FDH_TESTS_ERROR_CODE_HPP_
