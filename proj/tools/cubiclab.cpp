// cubiclab command line: lattice classification, excess numbers, example
// verification and construction. Exit codes: 0 ok, 1 usage, 2 verification
// failure, 3 parse error, 4 budget exhausted.

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cubiclab/classify/classifier.hpp"
#include "cubiclab/geometry/construct.hpp"
#include "cubiclab/intersection/excess.hpp"
#include "cubiclab/io/example_file.hpp"
#include "cubiclab/io/gram_text.hpp"
#include "cubiclab/io/report_json.hpp"

namespace {

using namespace cubiclab;
using io::Json;

enum Exit { kOk = 0, kUsage = 1, kVerifyFailed = 2, kParse = 3, kBudget = 4 };

struct Failure {
  int code;
  std::string kind;
  std::string message;
  std::optional<std::size_t> line, column;
  std::map<std::string, int> failures;
};

bool g_json = false;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int report_failure(const std::string& command, const Failure& f) {
  if (g_json) {
    emit(io::error_document(command, f.kind, f.message, f.line, f.column, f.failures));
  } else {
    std::cerr << "cubiclab " << command << ": " << f.message << "\n";
  }
  return f.code;
}

classify::Family family_arg(const std::string& tag) {
  const auto f = classify::parse_family(tag);
  if (!f) throw Failure{kUsage, "usage", "unknown family '" + tag + "' (use m12 or m20)", {}, {}, {}};
  return *f;
}

std::string vec_text(const lattice::LatticeVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str() + ')';
}

// --- classify ------------------------------------------------------------------

int run_classify(const std::string& family_tag) {
  const auto f = family_arg(family_tag);
  const auto reports = classify::classify_all(f);
  const auto groups = classify::merge_isometric(f);
  if (g_json) {
    Json j = io::envelope("classify");
    j["family"] = std::string(classify::family_data(f).tag);
    j["admissible"] = classify::admissible_params(f);
    Json rs = Json::array();
    for (const auto& r : reports) rs.push_back(io::to_json(r));
    j["reports"] = rs;
    j["components"] = groups;
    j["annotations"] = classify::classification_annotations();
    emit(j);
    return kOk;
  }
  const char sym = classify::family_data(f).symbol;
  std::cout << "family " << classify::family_data(f).tag << " (" << sym << ")\n";
  for (const auto& r : reports) {
    std::cout << sym << "_" << r.param << "  det " << r.determinant;
    if (!r.nonempty) {
      std::cout << "  empty, root " << vec_text(*r.short_root) << "\n";
      continue;
    }
    std::cout << "  nonempty, irreducible " << (*r.irreducible ? "yes" : "no");
    if (!r.merged_with.empty()) {
      std::cout << ", isometric to";
      for (auto q : r.merged_with) std::cout << ' ' << sym << "_" << q;
    }
    std::cout << "\n";
    for (const auto& c : r.rationality)
      std::cout << "    " << classify::certificate_kind_name(c.kind) << " " << c.value << ": " << c.narrative << "\n";
  }
  std::cout << "components:";
  for (const auto& g : groups) {
    std::cout << " {";
    for (std::size_t i = 0; i < g.size(); ++i) std::cout << (i ? "," : "") << g[i];
    std::cout << "}";
  }
  std::cout << "\n";
  for (const auto& a : classify::classification_annotations()) std::cout << "note: " << a << "\n";
  return kOk;
}

// --- lattice ------------------------------------------------------------------------

int run_shortroots(const std::string& gram_arg) {
  std::string text = gram_arg;
  if (std::filesystem::is_regular_file(gram_arg)) {
    std::ifstream in(gram_arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  lattice::GramMatrix g;
  try {
    g = io::parse_gram(text);
  } catch (const io::FormatError& e) {
    throw Failure{kParse, "parse", e.what(), {}, {}, {}};
  }
  if (!lattice::is_positive_definite(g)) throw Failure{kUsage, "usage", "Gram matrix is not positive definite", {}, {}, {}};
  const auto roots = lattice::short_vectors(g, 2);
  if (g_json) {
    Json j = io::envelope("lattice shortroots");
    j["gram"] = io::to_json(g);
    j["determinant"] = io::to_json(lattice::determinant(g));
    Json rs = Json::array();
    for (const auto& v : roots) rs.push_back(io::to_json(v));
    j["roots"] = rs;
    j["short_root"] = roots.empty() ? Json(nullptr) : io::to_json(roots.front());
    emit(j);
    return kOk;
  }
  std::cout << "gram " << g << "  det " << lattice::determinant(g) << "\n";
  if (roots.empty()) std::cout << "no vectors of norm 2\n";
  for (const auto& v : roots) std::cout << "root " << vec_text(v) << "\n";
  return kOk;
}

int run_overlattices(const std::string& family_tag, long long param) {
  const auto f = family_arg(family_tag);
  if (!classify::is_admissible(f, param))
    throw Failure{kUsage, "usage", "parameter " + std::to_string(param) + " is not admissible", {}, {}, {}};
  const auto log = classify::glue_candidates(f, param);
  const auto det = lattice::determinant(classify::family_gram(f, param));
  if (g_json) {
    Json j = io::envelope("lattice overlattices");
    j["family"] = std::string(classify::family_data(f).tag);
    j["param"] = param;
    j["determinant"] = io::to_json(det);
    Json l = Json::array();
    for (const auto& c : log) l.push_back(io::to_json(c));
    j["glue_log"] = l;
    emit(j);
    return kOk;
  }
  std::cout << classify::family_data(f).symbol << "_" << param << "  det " << det << "\n";
  if (log.empty()) std::cout << "no index-n overlattice candidates\n";
  for (const auto& c : log) {
    std::cout << "n=" << c.n << " (" << c.xp << "," << c.yp << ",1) -> (" << c.a << "," << c.b << "," << c.c << ")  "
              << classify::glue_verdict_name(c.verdict);
    if (c.witness) std::cout << " root " << vec_text(*c.witness);
    if (c.complement && c.verdict != classify::GlueVerdict::rejected_short_root)
      std::cout << " complement " << c.complement->gram;
    std::cout << "\n";
  }
  return kOk;
}

// --- excess --------------------------------------------------------------------------

int run_excess(const std::string& preset_name, long long d, long long g, long long k1c, std::optional<long long> k2c) {
  const auto preset = intersection::parse_preset(preset_name);
  if (!preset)
    throw Failure{kUsage, "usage",
                  "unknown preset '" + preset_name +
                      "' (cubic-fourfold, projected-p4, scroll-projection, veronese-projection)",
                  {}, {}, {}};
  // the second surface defaults to the plane: K_P.C = -3d
  const long long k2 = k2c ? *k2c : -3 * d;
  long long mult = 0;
  std::optional<long long> excess;
  try {
    mult = intersection::mult_along_curve(*preset, d, g, k1c, k2);
    excess = intersection::excess_surface_plane(k1c, d, g);
  } catch (const std::invalid_argument&) {
    if (d < 0 || g < 0) throw Failure{kUsage, "usage", "degree and genus must be nonnegative", {}, {}, {}};
  }
  const long long other =
      intersection::mult_along_curve(*preset == intersection::AmbientPreset::cubic_fourfold
                                         ? intersection::AmbientPreset::projected_p4
                                         : intersection::AmbientPreset::cubic_fourfold,
                                     d, g, k1c, k2);
  if (g_json) {
    Json j = io::envelope("excess");
    j["preset"] = std::string(intersection::preset_name(*preset));
    j["d"] = d;
    j["g"] = g;
    j["k1c"] = k1c;
    j["k2c"] = k2;
    j["ambient_term"] = intersection::ambient_term(*preset, d);
    j["mult"] = mult;
    j["mult_by_preset"] = {{"cubic-fourfold", *preset == intersection::AmbientPreset::cubic_fourfold ? mult : other},
                           {"projected-p4", *preset == intersection::AmbientPreset::projected_p4 ? mult : other}};
    j["excess_surface_plane"] = excess ? Json(*excess) : Json(nullptr);
    emit(j);
    return kOk;
  }
  std::cout << "preset " << intersection::preset_name(*preset) << "  d=" << d << " g=" << g << " K1.C=" << k1c
            << " K2.C=" << k2 << "\n";
  std::cout << "mult " << mult << "  (other preset: " << other << ")\n";
  if (excess) std::cout << "S.P " << *excess << "\n";
  return kOk;
}

// --- verify / construct ----------------------------------------------------------

int run_verify(const std::string& dir) {
  if (!std::filesystem::is_directory(dir)) throw Failure{kUsage, "usage", "not a directory: " + dir, {}, {}, {}};
  const auto files = io::example_files(dir);
  std::vector<geometry::ExampleRecord> recs;
  for (const auto& p : files) {
    try {
      recs.push_back(io::load_example(p));
    } catch (const io::ParseError& e) {
      throw Failure{kParse, "parse", p.filename().string() + ": " + e.what(), e.line(), e.column(), {}};
    } catch (const io::FormatError& e) {
      throw Failure{kParse, "format", p.filename().string() + ": " + e.what(), {}, {}, {}};
    }
  }
  std::vector<std::future<geometry::VerificationReport>> jobs;
  for (const auto& r : recs) jobs.push_back(std::async(std::launch::async, [&r] { return geometry::verify_example(r); }));
  std::vector<geometry::VerificationReport> reps;
  for (auto& j : jobs) reps.push_back(j.get());
  int passed = 0;
  for (const auto& r : reps) passed += r.passed();
  if (g_json) {
    Json j = io::envelope("verify");
    Json ex = Json::array();
    for (std::size_t i = 0; i < reps.size(); ++i) ex.push_back(io::to_json(reps[i], recs[i]));
    j["examples"] = ex;
    j["passed"] = passed;
    j["total"] = reps.size();
    emit(j);
  } else {
    for (const auto& r : reps)
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.label << "  smooth=" << r.smooth
                << " plane=" << r.contains_plane << " surface=" << r.contains_surface << " (" << r.surface_used
                << ") profile=" << r.profile.spec.to_string() << "\n";
    std::cout << passed << "/" << reps.size() << " passed\n";
  }
  return passed == static_cast<int>(reps.size()) ? kOk : kVerifyFailed;
}

int run_construct(const std::string& family_tag, long long param, std::uint64_t seed, int budget, bool line) {
  const auto f = family_arg(family_tag);
  geometry::ExampleRecord rec;
  try {
    rec = geometry::construct_component_example(f, param, seed, budget,
                                                line ? geometry::Variant::line : geometry::Variant::standard);
  } catch (const geometry::BudgetExhausted& e) {
    throw Failure{kBudget, "budget", e.what(), {}, {}, e.failures()};
  } catch (const std::invalid_argument& e) {
    throw Failure{kUsage, "usage", e.what(), {}, {}, {}};
  }
  std::cout << io::example_to_text(rec);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cubiclab: cubic fourfolds containing a plane and a scroll or Veronese surface"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g_json, "machine-readable output (schema cubiclab.report/v1)");

  std::string family, preset, gram, dir;
  long long param = 0, d = 0, g = 0, k1c = 0;
  std::optional<long long> k2c;
  std::uint64_t seed = 0;
  int budget = 50;
  bool line = false;

  auto* classify = app.add_subcommand("classify", "classify the components of a family");
  classify->add_option("--family", family, "m12 or m20")->required();

  auto* lattice_cmd = app.add_subcommand("lattice", "lattice computations");
  lattice_cmd->require_subcommand(1);
  auto* shortroots = lattice_cmd->add_subcommand("shortroots", "norm-2 vectors of a Gram matrix");
  shortroots->add_option("--gram", gram, "file, JSON or rows like 3,1;1,3")->required();
  auto* overlattices = lattice_cmd->add_subcommand("overlattices", "cyclic glue candidates and verdicts");
  overlattices->add_option("--family", family, "m12 or m20")->required();
  overlattices->add_option("--param", param)->required();

  auto* excess = app.add_subcommand("excess", "multiplicity along a common plane curve");
  excess->add_option("--preset", preset, "cubic-fourfold, projected-p4, scroll-projection, veronese-projection")
      ->required();
  excess->add_option("--d", d, "degree of the curve")->required();
  excess->add_option("--g", g, "genus of the curve")->required();
  excess->add_option("--k1c", k1c, "K_S1 . C")->required();
  excess->add_option("--k2c", k2c, "K_S2 . C (default: plane, -3d)");

  auto* verify = app.add_subcommand("verify", "verify a directory of example files");
  verify->add_option("--examples", dir)->required();

  auto* construct = app.add_subcommand("construct", "build a smooth cubic for a component");
  construct->add_option("--family", family, "m12 or m20")->required();
  construct->add_option("--param", param)->required();
  construct->add_option("--seed", seed)->required();
  construct->add_option("--budget", budget, "cubic draws before giving up")->capture_default_str();
  construct->add_flag("--line", line, "line variant for m12 params 0 (ruling) and 1 (directrix)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (g_json) {
      emit(io::error_document("", "usage", e.what()));
      return kUsage;
    }
    app.exit(e);
    return kUsage;
  }

  std::string command = classify->parsed()       ? "classify"
                        : shortroots->parsed()   ? "lattice shortroots"
                        : overlattices->parsed() ? "lattice overlattices"
                        : excess->parsed()       ? "excess"
                        : verify->parsed()       ? "verify"
                                                 : "construct";
  try {
    if (classify->parsed()) return run_classify(family);
    if (shortroots->parsed()) return run_shortroots(gram);
    if (overlattices->parsed()) return run_overlattices(family, param);
    if (excess->parsed()) return run_excess(preset, d, g, k1c, k2c);
    if (verify->parsed()) return run_verify(dir);
    return run_construct(family, param, seed, budget, line);
  } catch (const Failure& f) {
    return report_failure(command, f);
  } catch (const std::exception& e) {
    return report_failure(command, {kUsage, "internal", e.what(), {}, {}, {}});
  }
}
