#pragma once

#include <gtest/gtest.h>

#include <string>

#include "tperm/error.hpp"
#include "tperm/format.hpp"

namespace tperm::testing {

/// Passes when f throws tperm::Error of the given kind.
template <class F>
::testing::AssertionResult raises(ErrorKind kind, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.kind() == kind) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "threw " << e.what();
  }
  return ::testing::AssertionFailure() << "did not throw " << to_string(kind);
}

inline Perm P(const std::string& text) { return parse_perm(text); }

}  // namespace tperm::testing

namespace tperm {
// Readable failure messages for Perm comparisons.
inline void PrintTo(const Perm& p, std::ostream* os) { *os << format_perm(p); }
}  // namespace tperm
