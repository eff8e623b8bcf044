#pragma once

#include <nlohmann/json.hpp>

#include "liaison/pipelines.hpp"

namespace liaisonlab {

inline constexpr const char* kCertificateSchema = "liaisonlab.certificate/1";

/// Keys appear in a fixed order; field elements and counts are plain numbers.
nlohmann::ordered_json to_json(const liaison::Certificate& cert);
/// The certificate without wall-clock data, for golden comparisons.
nlohmann::ordered_json without_timings(nlohmann::ordered_json j);

std::string to_text(const liaison::Certificate& cert);

}  // namespace liaisonlab
