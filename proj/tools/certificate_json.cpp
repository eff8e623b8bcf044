#include "certificate_json.hpp"

#include <sstream>

namespace liaisonlab {

using nlohmann::ordered_json;

namespace {

ordered_json value_json(const liaison::CheckValue& v) {
  return std::visit([](const auto& x) { return ordered_json(x); }, v);
}

std::string value_text(const liaison::CheckValue& v) {
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  return value_json(v).dump();
}

}  // namespace

ordered_json to_json(const liaison::Certificate& cert) {
  ordered_json j;
  j["schema"] = kCertificateSchema;
  j["pipeline"] = liaison::pipeline_name(cert.pipeline);
  j["prime"] = cert.prime;
  j["seed"] = cert.seed;
  j["attempt"] = cert.attempt;
  j["effective_seed"] = cert.effective_seed;
  j["pass"] = cert.pass();
  ordered_json meta = ordered_json::object();
  for (const auto& [k, v] : cert.metadata) meta[k] = value_json(v);
  j["metadata"] = std::move(meta);
  ordered_json checks = ordered_json::array();
  for (const auto& c : cert.checks) {
    ordered_json e;
    e["name"] = c.name;
    e["relation"] = c.relation;
    e["expected"] = value_json(c.expected);
    e["computed"] = value_json(c.computed);
    e["pass"] = c.pass;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  ordered_json resamples = ordered_json::array();
  for (const auto& r : cert.resamples) {
    resamples.push_back(ordered_json{{"operation", r.operation}, {"attempt", r.attempt}, {"reason", r.reason}});
  }
  j["resamples"] = std::move(resamples);
  j["aborted"] = cert.aborted ? ordered_json(*cert.aborted) : ordered_json(nullptr);
  ordered_json timings = ordered_json::object();
  for (const auto& [stage, secs] : cert.timings) timings[stage] = secs;
  j["timings"] = std::move(timings);
  return j;
}

ordered_json without_timings(ordered_json j) {
  j.erase("timings");
  return j;
}

std::string to_text(const liaison::Certificate& cert) {
  std::ostringstream os;
  os << liaison::pipeline_name(cert.pipeline) << " p=" << cert.prime << " seed=" << cert.seed;
  if (cert.attempt) os << " (attempt " << cert.attempt << ", seed " << cert.effective_seed << ")";
  os << '\n';
  for (const auto& c : cert.checks) {
    os << (c.pass ? "PASS  " : "FAIL  ") << c.name << ": " << value_text(c.computed);
    os << (c.relation == "==" ? " (expected " : " (expected >= ") << value_text(c.expected) << ")\n";
  }
  for (const auto& r : cert.resamples) os << "resampled " << r.operation << " #" << r.attempt << ": " << r.reason << '\n';
  if (cert.aborted) os << "aborted: " << *cert.aborted << '\n';
  os << (cert.pass() ? "all checks passed" : "some checks failed") << '\n';
  return os.str();
}

}  // namespace liaisonlab
