#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "liaison/constructions.hpp"

namespace liaison {

enum class PipelineId { kH10_8, kM10_n, kH13_7, kH12_8 };

/// "h10_8", "m10_n", ...
std::string_view pipeline_name(PipelineId id);
/// Accepts both h10-8 and h10_8 spellings.
std::optional<PipelineId> parse_pipeline(std::string_view name);

/// Primes accepted by the pipelines.
inline constexpr std::uint64_t kMinPrime = 1009;
inline constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 20;

using CheckValue = std::variant<bool, long long, std::vector<long long>, std::string>;

struct CheckResult {
  std::string name;
  /// "==" or ">=" (computed >= expected).
  std::string relation = "==";
  CheckValue expected;
  CheckValue computed;
  bool pass = false;
};

struct Certificate {
  PipelineId pipeline = PipelineId::kH10_8;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  /// Retry index and the seed actually used for it.
  int attempt = 0;
  std::uint64_t effective_seed = 0;
  std::vector<std::pair<std::string, CheckValue>> metadata;
  std::vector<CheckResult> checks;
  ResampleLog resamples;
  /// Set when a computation could not continue (the error text).
  std::optional<std::string> aborted;
  std::vector<std::pair<std::string, double>> timings;
  /// Intermediate ideals by name, for dumps.
  std::vector<std::pair<std::string, Ideal>> ideals;
  /// Raw draws of the main stream, when recorded.
  std::vector<std::uint64_t> choices;

  bool pass() const;
};

enum class PointMode { kAmbient, kOnCurve };

struct PipelineOptions {
  std::uint64_t prime = 10007;
  std::uint64_t seed = 42;
  /// Marked points for m10_n.
  int points = 5;
  PointMode point_mode = PointMode::kAmbient;
  /// Highest closed-point degree in the collinear fiber scan.
  int extension_cap = 1;
  int jobs = 1;
  bool record_choices = false;
  int max_attempts = 5;
};

/// Seed of retry `attempt`; attempt 0 is the seed itself.
std::uint64_t derived_seed(std::uint64_t seed, int attempt);

/// Runs the pipeline, retrying with derived seeds when a sample turns out
/// degenerate. Throws kDegenerateSample once every attempt is used up and
/// kInvalidArgument for a prime outside [1009, 2^20].
Certificate run_pipeline(PipelineId id, const PipelineOptions& options);

Certificate pipeline_h10_8(std::uint64_t prime, std::uint64_t seed);
Certificate pipeline_m10_n(std::uint64_t prime, std::uint64_t seed, int n, PointMode mode = PointMode::kAmbient);
Certificate pipeline_h13_7(std::uint64_t prime, std::uint64_t seed);
Certificate pipeline_h12_8(std::uint64_t prime, std::uint64_t seed);

}  // namespace liaison
