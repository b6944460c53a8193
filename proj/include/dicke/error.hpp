// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace dicke {

/// Invalid argument combination (bad (N, j) pair, unknown axis, out-of-range angle, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A numerical routine failed or produced an unusable result.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// |<J>| vanishes, so the mean-spin frame and the squeezing parameters are undefined.
struct DegenerateFrameError : NumericError {
  using NumericError::NumericError;
};

/// Problem size exceeds a configured cap (full-space oracle).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input file. The message carries the location when known.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
  ParseError(const std::string& what, int line_, int column_)
      : std::runtime_error(what), line(line_), column(column_) {}

  int line = 0;    // 1-based, 0 when unknown
  int column = 0;
};

}  // namespace dicke
