#include "liaison/errors.hpp"

namespace liaison {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::kHomogeneity: return "HOMOGENEITY_ERROR";
    case ErrorCode::kMixedRings: return "MIXED_RINGS";
    case ErrorCode::kParse: return "PARSE_ERROR";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kOverflow: return "DEGREE_OVERFLOW";
    case ErrorCode::kDimension: return "DIMENSION_ERROR";
    case ErrorCode::kRegularity: return "REGULARITY_ERROR";
    case ErrorCode::kInfeasibleLink: return "INFEASIBLE_LINK";
    case ErrorCode::kInconsistentLink: return "INCONSISTENT_LINK";
    case ErrorCode::kMapUndefined: return "MAP_UNDEFINED";
    case ErrorCode::kProjection: return "PROJECTION_ERROR";
    case ErrorCode::kSpeciality: return "SPECIALITY_ERROR";
    case ErrorCode::kDegenerateSample: return "DEGENERATE_SAMPLE";
    case ErrorCode::kRankShortfall: return "RANK_SHORTFALL";
    case ErrorCode::kNotContaining: return "NOT_CONTAINING";
    case ErrorCode::kPointScarcity: return "POINT_SCARCITY";
    case ErrorCode::kSpecialPosition: return "SPECIAL_POSITION";
    case ErrorCode::kNotEmbedding: return "NOT_EMBEDDING";
    case ErrorCode::kSaturationLimit: return "SATURATION_LIMIT";
    case ErrorCode::kLogic: return "LOGIC_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace liaison
