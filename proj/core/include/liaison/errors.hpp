#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liaison {

enum class ErrorCode {
  kDivisionByZero,
  kHomogeneity,
  kMixedRings,
  kParse,
  kInvalidArgument,
  kOverflow,
  kDimension,
  kRegularity,
  kInfeasibleLink,
  kInconsistentLink,
  kMapUndefined,
  kProjection,
  kSpeciality,
  kDegenerateSample,
  kRankShortfall,
  kNotContaining,
  kPointScarcity,
  kSpecialPosition,
  kNotEmbedding,
  kSaturationLimit,
  kLogic,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace liaison
