#ifndef CUBICLAB_IO_EXAMPLE_FILE_HPP
#define CUBICLAB_IO_EXAMPLE_FILE_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubiclab/geometry/examples.hpp"
#include "cubiclab/io/poly_text.hpp"

// Example files are JSON objects:
//   schema, label, field_char, family ("m12"/"m20"), expected_param,
//   plane (three linear forms), surface (recipe tag or list of generators),
//   cubic, expected_profile, notes (optional).

namespace cubiclab::io {

inline constexpr const char* kExampleSchema = "cubiclab.example/v1";

/// Bad file contents that are not polynomial syntax errors.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline ParseError in_field(const ParseError& e, const std::string& field) {
  return ParseError(field + ": " + e.message(), e.line(), e.column());
}

template <class T>
T required(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw FormatError(std::string("key '") + key + "' has the wrong type");
  }
}

inline Poly parse_field(const std::string& text, const RingPtr& ring, const std::string& field) {
  try {
    return parse_poly(text, ring);
  } catch (const ParseError& e) {
    throw in_field(e, field);
  }
}

}  // namespace detail

inline geometry::ExampleRecord example_from_json(const nlohmann::json& j) {
  using geometry::ExampleRecord;
  if (!j.is_object()) throw FormatError("example file must be a JSON object");
  if (j.contains("schema") && j.at("schema") != kExampleSchema)
    throw FormatError("unsupported schema " + j.at("schema").dump());
  const auto p = detail::required<std::uint32_t>(j, "field_char");
  if (!poly::PrimeField::is_prime(p)) throw FormatError("field_char must be prime");
  ExampleRecord rec(poly::Ring::indexed("x", 6, poly::MonomialOrder::grevlex(), p));
  const RingPtr& ring = rec.ring();
  rec.label = detail::required<std::string>(j, "label");
  rec.field_char = p;
  const auto fam = classify::parse_family(detail::required<std::string>(j, "family"));
  if (!fam) throw FormatError("unknown family");
  rec.family = *fam;
  rec.expected_param = detail::required<long long>(j, "expected_param");

  const auto plane = detail::required<std::vector<std::string>>(j, "plane");
  for (std::size_t i = 0; i < plane.size(); ++i)
    rec.plane.add(detail::parse_field(plane[i], ring, "plane[" + std::to_string(i) + "]"));

  if (!j.contains("surface")) throw FormatError("missing key 'surface'");
  const auto& surf = j.at("surface");
  if (surf.is_string()) {
    rec.recipe = geometry::SurfaceRecipe::parse(surf.get<std::string>());
    if (!rec.recipe) throw FormatError("unknown surface recipe " + surf.dump());
  } else if (surf.is_array()) {
    poly::Ideal s(ring);
    for (std::size_t i = 0; i < surf.size(); ++i) {
      if (!surf[i].is_string()) throw FormatError("surface generators must be strings");
      s.add(detail::parse_field(surf[i].get<std::string>(), ring, "surface[" + std::to_string(i) + "]"));
    }
    rec.surface = std::move(s);
  } else {
    throw FormatError("key 'surface' must be a recipe tag or a list of polynomials");
  }

  rec.cubic = detail::parse_field(detail::required<std::string>(j, "cubic"), ring, "cubic");
  const auto prof = geometry::ProfileSpec::parse(detail::required<std::string>(j, "expected_profile"));
  if (!prof) throw FormatError("bad expected_profile");
  rec.expected = *prof;
  if (j.contains("notes")) rec.notes = detail::required<std::vector<std::string>>(j, "notes");
  return rec;
}

inline nlohmann::ordered_json example_to_json(const geometry::ExampleRecord& rec) {
  nlohmann::ordered_json j;
  j["schema"] = kExampleSchema;
  j["label"] = rec.label;
  j["field_char"] = rec.field_char;
  j["family"] = std::string(classify::family_data(rec.family).tag);
  j["expected_param"] = rec.expected_param;
  std::vector<std::string> plane;
  for (const auto& l : rec.plane.gens()) plane.push_back(to_string(l));
  j["plane"] = plane;
  if (rec.recipe) {
    j["surface"] = rec.recipe->tag();
  } else {
    std::vector<std::string> gens;
    if (rec.surface)
      for (const auto& g : rec.surface->gens()) gens.push_back(to_string(g));
    j["surface"] = gens;
  }
  j["cubic"] = to_string(rec.cubic);
  j["expected_profile"] = rec.expected.to_string();
  j["notes"] = rec.notes;
  return j;
}

inline std::string example_to_text(const geometry::ExampleRecord& rec) { return example_to_json(rec).dump(2) + "\n"; }

inline geometry::ExampleRecord parse_example(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return example_from_json(j);
}

inline geometry::ExampleRecord load_example(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_example(ss.str());
}

/// *.json files of a directory, sorted by name.
inline std::vector<std::filesystem::path> example_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cubiclab::io

#endif  // CUBICLAB_IO_EXAMPLE_FILE_HPP
