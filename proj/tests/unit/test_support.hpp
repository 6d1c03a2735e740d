#pragma once

#include <gtest/gtest.h>

#include <functional>

#include "regmod/error.hpp"
#include "regmod/grid.hpp"

namespace regmod::testing {

inline void expect_code(ErrorCode want, const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(want) << ", nothing thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), want) << e.what();
  }
}

inline GridSpec grid(int density) {
  GridSpec g;
  g.region = Ball(Point{0.0}, 1.0);
  g.density = density;
  return g;
}

inline RadiusLadder ladder(double r0 = 0.5, int rungs = 8) { return {r0, 0.5, rungs}; }

}  // namespace regmod::testing
