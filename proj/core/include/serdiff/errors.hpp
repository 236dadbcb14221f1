#pragma once

#include <stdexcept>
#include <string>

namespace serdiff {

// A metric is mathematically undefined for the given inputs (HD95 of an
// empty mask, forgetting rate over a single stage, ...).
struct UndefinedMetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Training produced a non-finite loss. Carries the global step index so the
// failure can be located in the metrics stream.
struct NumericFailure : std::runtime_error {
  NumericFailure(const std::string& what, long long failed_step)
      : std::runtime_error(what), step(failed_step) {}
  long long step;
};

// A required on-disk artifact (dataset, checkpoint, run output) is missing
// or fails validation.
struct MissingArtifactError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace serdiff
