#ifndef CUBICLAB_IO_REPORT_JSON_HPP
#define CUBICLAB_IO_REPORT_JSON_HPP

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubiclab/classify/classifier.hpp"
#include "cubiclab/geometry/examples.hpp"

// JSON forms of the reports printed by the CLI. Every document carries
// "schema": "cubiclab.report/v1" and "command"; failures carry an "error"
// object instead of the payload. schema/report.v1.json describes the lot.

namespace cubiclab::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "cubiclab.report/v1";

/// Integers as JSON numbers when they fit in 64 bits, else decimal strings.
inline Json to_json(const lattice::Integer& n) {
  if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
    return static_cast<long long>(n);
  return n.str();
}

inline Json to_json(const lattice::LatticeVector& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(to_json(c));
  return out;
}

inline Json to_json(const lattice::IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

inline Json to_json(const lattice::GramMatrix& g) { return to_json(g.matrix()); }

inline Json to_json(const classify::OverlatticeCandidate& c) {
  Json j;
  j["n"] = c.n;
  j["x"] = c.xp;
  j["y"] = c.yp;
  j["glue"] = {to_json(c.a), to_json(c.b), to_json(c.c)};
  j["gram"] = to_json(c.gram);
  j["verdict"] = std::string(classify::glue_verdict_name(c.verdict));
  j["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
  j["complement_gram"] = c.complement ? to_json(c.complement->gram) : Json(nullptr);
  return j;
}

inline Json to_json(const classify::ComponentReport& r) {
  Json j;
  j["family"] = std::string(classify::family_data(r.family).tag);
  j["param"] = r.param;
  j["determinant"] = to_json(r.determinant);
  j["nonempty"] = r.nonempty;
  j["short_root"] = r.short_root ? to_json(*r.short_root) : Json(nullptr);
  Json roots = Json::array();
  for (const auto& v : r.roots) roots.push_back(to_json(v));
  j["roots"] = roots;
  j["irreducible"] = r.irreducible ? Json(*r.irreducible) : Json(nullptr);
  Json log = Json::array();
  for (const auto& c : r.glue_log) log.push_back(to_json(c));
  j["glue_log"] = log;
  Json certs = Json::array();
  for (const auto& c : r.rationality)
    certs.push_back({{"kind", std::string(classify::certificate_kind_name(c.kind))},
                     {"value", c.value},
                     {"narrative", c.narrative}});
  j["rationality"] = certs;
  j["merged_with"] = r.merged_with;
  j["notes"] = r.notes;
  return j;
}

inline Json to_json(const geometry::VerificationReport& r, const geometry::ExampleRecord& rec) {
  Json j;
  j["label"] = r.label;
  j["passed"] = r.passed();
  j["smooth"] = r.smooth;
  j["contains_plane"] = r.contains_plane;
  j["contains_surface"] = r.contains_surface;
  j["profile_matches"] = r.profile_matches;
  j["surface_used"] = r.surface_used;
  j["recipes_tried"] = r.recipes_tried;
  j["expected_profile"] = rec.expected.to_string();
  j["profile"] = {{"shape", r.profile.spec.to_string()},
                  {"dim", r.profile.dim},
                  {"degree", r.profile.degree},
                  {"rational_points", r.profile.rational_points},
                  {"reducedness", r.profile.reducedness}};
  j["family"] = std::string(classify::family_data(rec.family).tag);
  j["expected_param"] = rec.expected_param;
  return j;
}

inline Json envelope(const std::string& command) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  return j;
}

/// kind: usage, parse, format, verification, budget, internal.
inline Json error_document(const std::string& command, const std::string& kind, const std::string& message,
                           std::optional<std::size_t> line = std::nullopt,
                           std::optional<std::size_t> column = std::nullopt,
                           const std::map<std::string, int>& failures = {}) {
  Json j = envelope(command);
  Json e;
  e["kind"] = kind;
  e["message"] = message;
  if (line) e["line"] = *line;
  if (column) e["column"] = *column;
  if (!failures.empty()) {
    Json f = Json::object();
    for (const auto& [k, v] : failures) f[k] = v;
    e["failures"] = f;
  }
  j["error"] = e;
  return j;
}

}  // namespace cubiclab::io

#endif  // CUBICLAB_IO_REPORT_JSON_HPP
