#pragma once

#include <stdexcept>

namespace ddakit {

// Typed failures raised by the numeric, statistics, and I/O layers.
// Everything derives from std::runtime_error so callers can catch broadly
// or on the precise condition they care about.

struct NonSymmetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotPositiveDefiniteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateClassError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroWithinScatterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotTwoClassError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ShapeMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OneClassOnlyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MalformedHeaderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TruncatedPayloadError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AllBatchesSkippedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ddakit
