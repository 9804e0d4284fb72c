#pragma once

#include <doctest.h>

#include "tdeig/error.hpp"

namespace tdeig::test {

// Error code thrown by fn; fails the test when nothing is thrown.
inline ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected tdeig::Error");
  return ErrorCode::NonFinite;
}

}  // namespace tdeig::test
