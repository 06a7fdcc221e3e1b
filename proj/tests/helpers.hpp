#pragma once

#include <string>

#include <doctest.h>

#include "fishburn/error.hpp"
#include "fishburn/text_io.hpp"

namespace testing {

inline fishburn::Sequence seq(const std::string& s) { return fishburn::text::parse_sequence(s); }
inline fishburn::Tree tree(const std::string& s) { return fishburn::text::parse_tree(s); }
inline fishburn::FishburnCover cover(const std::string& s) { return fishburn::text::parse_cover(s); }

// Runs f and returns the Error it throws; fails the test if none.
template <class F>
fishburn::Error error_of(F&& f) {
  try {
    f();
  } catch (const fishburn::Error& e) {
    return e;
  }
  FAIL("expected a fishburn::Error");
  return fishburn::Error(fishburn::ErrorCode::Internal, "unreachable");
}

}  // namespace testing
