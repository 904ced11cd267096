#ifndef CUBICLAB_CLASSIFY_CLASSIFIER_HPP
#define CUBICLAB_CLASSIFY_CLASSIFIER_HPP

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubiclab/classify/families.hpp"
#include "cubiclab/intersection/excess.hpp"
#include "cubiclab/lattice/isometry.hpp"
#include "cubiclab/lattice/short_vectors.hpp"

namespace cubiclab::classify {

using lattice::Complement;
using lattice::LatticeVector;

enum class GlueVerdict { rejected_short_root, rejected_not_even, viable };

inline std::string_view glue_verdict_name(GlueVerdict v) {
  switch (v) {
    case GlueVerdict::rejected_short_root: return "rejected-short-root";
    case GlueVerdict::rejected_not_even: return "rejected-not-even";
    case GlueVerdict::viable: return "viable";
  }
  return "viable";
}

/// B = <h^2, P, U> with U = (x' h^2 + y' P + S) / n.
struct OverlatticeCandidate {
  long long n = 0, xp = 0, yp = 0;
  Integer a, b, c;
  GramMatrix gram;
  GlueVerdict verdict = GlueVerdict::viable;
  std::optional<LatticeVector> witness;  // a norm-2 vector of gram
  std::optional<Complement> complement;  // h^2-perp of gram, when computed

  /// Recheck the verdict from the stored data alone.
  bool reverify() const {
    switch (verdict) {
      case GlueVerdict::rejected_short_root:
        return witness && lattice::vector_norm(gram, *witness) == 2;
      case GlueVerdict::rejected_not_even:
        return complement && !lattice::is_even(complement->gram) &&
               lattice::restrict_to(gram, complement->basis) == complement->gram;
      case GlueVerdict::viable:
        return !lattice::has_short_root(gram) && complement && lattice::is_even(complement->gram);
    }
    return false;
  }
};

namespace detail {

inline std::optional<Integer> exact_quotient(const Integer& num, const Integer& den) {
  if (num % den != 0) return std::nullopt;
  return num / den;
}

inline void adjudicate(OverlatticeCandidate& cand) {
  if (auto root = lattice::has_short_root(cand.gram)) {
    cand.verdict = GlueVerdict::rejected_short_root;
    cand.witness = std::move(root);
    return;
  }
  cand.complement = lattice::orthogonal_complement(cand.gram, LatticeVector::unit(3, 0));
  cand.verdict = lattice::is_even(cand.complement->gram) ? GlueVerdict::viable
                                                         : GlueVerdict::rejected_not_even;
}

}  // namespace detail

/// Cyclic glue scan. For each n >= 2 with n^2 | det and each (x', y') in
/// [0, n)^2, keep the triples where U.h^2, U.P and U.U are integers. The
/// numerators are read off the family gram, so the surface row enters as
/// h^2.S (3 for the scroll, 4 for the Veronese) and S.S.
inline std::vector<OverlatticeCandidate> glue_candidates(Family f, long long param) {
  if (!is_admissible(f, param))
    throw std::invalid_argument("glue_candidates: parameter is not admissible");
  const GramMatrix g = family_gram(f, param);
  const Integer det = lattice::determinant(g);
  std::vector<OverlatticeCandidate> out;
  for (long long n = 2; Integer(n) * n <= det; ++n) {
    if (det % (Integer(n) * n) != 0) continue;
    for (long long xp = 0; xp < n; ++xp) {
      for (long long yp = 0; yp < n; ++yp) {
        const LatticeVector u{xp, yp, 1};
        const auto a = detail::exact_quotient(lattice::inner_product(g, u, LatticeVector{1, 0, 0}), n);
        const auto b = detail::exact_quotient(lattice::inner_product(g, u, LatticeVector{0, 1, 0}), n);
        const auto c = detail::exact_quotient(lattice::vector_norm(g, u), Integer(n) * n);
        if (!a || !b || !c) continue;
        OverlatticeCandidate cand;
        cand.n = n;
        cand.xp = xp;
        cand.yp = yp;
        cand.a = *a;
        cand.b = *b;
        cand.c = *c;
        lattice::IntMatrix m{{3, 1, 0}, {1, 3, 0}, {0, 0, 0}};
        m(0, 2) = m(2, 0) = *a;
        m(1, 2) = m(2, 1) = *b;
        m(2, 2) = *c;
        cand.gram = GramMatrix(std::move(m));
        detail::adjudicate(cand);
        out.push_back(std::move(cand));
      }
    }
  }
  return out;
}

inline bool is_square_free(Integer n) {
  if (n < 0) n = -n;
  for (Integer p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

enum class CertificateKind { odd_multisection, reducible_oadp };

inline std::string_view certificate_kind_name(CertificateKind k) {
  return k == CertificateKind::odd_multisection ? "odd-multisection" : "reducible-OADP";
}

struct RationalityCertificate {
  CertificateKind kind;
  long long value;
  std::string narrative;
};

/// (h^2 - P).S odd gives an odd multisection of the quadric fibration from P;
/// a secant count of 1 for S u P gives a reducible OADP surface.
inline std::vector<RationalityCertificate> rationality_certificates(Family f, long long param) {
  if (!is_admissible(f, param))
    throw std::invalid_argument("rationality_certificates: parameter is not admissible");
  const auto& d = family_data(f);
  const char* surface = f == Family::scroll ? "S" : "V";
  std::vector<RationalityCertificate> out;
  const long long q = d.h2_surface - param;
  if (q % 2 != 0) {
    out.push_back({CertificateKind::odd_multisection, q,
                   std::string("Q.") + surface + " = " + std::to_string(q) +
                       " is odd: the quadric fibration has an odd multisection"});
  }
  if (param >= 0 && param <= d.h2_surface) {
    const auto sc = intersection::secant_count(d.h2_surface, 1, param);
    if (sc.kind == intersection::SecantClass::oadp) {
      out.push_back({CertificateKind::reducible_oadp, sc.count,
                     std::string(surface) + " u P: " + std::to_string(d.h2_surface) + "*1 - " +
                         std::to_string(param) + " = 1 secant line through a general point"});
    }
  }
  return out;
}

struct ComponentReport {
  Family family = Family::scroll;
  long long param = 0;
  Integer determinant;
  bool nonempty = false;
  std::optional<LatticeVector> short_root;  // first root in lexicographic order
  std::vector<LatticeVector> roots;         // every norm-2 vector up to sign
  std::vector<OverlatticeCandidate> glue_log;
  std::optional<bool> irreducible;          // unset for empty loci
  std::vector<RationalityCertificate> rationality;
  std::vector<long long> merged_with;
  std::vector<std::string> notes;
};

/// Glue log and verdict for a nonempty component.
inline ComponentReport irreducibility(Family f, long long param) {
  if (!is_admissible(f, param))
    throw std::invalid_argument("irreducibility: parameter is not admissible");
  ComponentReport r;
  r.family = f;
  r.param = param;
  const GramMatrix g = family_gram(f, param);
  r.determinant = lattice::determinant(g);
  if (lattice::has_short_root(g)) throw std::invalid_argument("irreducibility: component is empty");
  r.nonempty = true;
  if (is_square_free(r.determinant)) {
    r.irreducible = true;
    return r;
  }
  r.glue_log = glue_candidates(f, param);
  r.irreducible = std::all_of(r.glue_log.begin(), r.glue_log.end(), [](const auto& c) {
    return c.verdict != GlueVerdict::viable;
  });
  return r;
}

inline ComponentReport classify_param(Family f, long long param) {
  if (!is_admissible(f, param))
    throw std::invalid_argument("classify_param: parameter is not admissible");
  const GramMatrix g = family_gram(f, param);
  ComponentReport r;
  r.roots = lattice::short_vectors(g, 2);
  if (r.roots.empty()) {
    auto roots = std::move(r.roots);
    r = irreducibility(f, param);
    r.roots = std::move(roots);
    r.rationality = rationality_certificates(f, param);
  } else {
    r.family = f;
    r.param = param;
    r.determinant = lattice::determinant(g);
    r.short_root = r.roots.front();
  }
  if (f == Family::veronese) {
    r.notes.push_back("glue numerator for U.h^2 uses V.h^2 = 4");
    if (param == 4) r.notes.push_back("discriminant 32 from the closed form; the value 35 in the prose is a typo");
  }
  return r;
}

/// Groups nonempty params whose family lattices are isometric. Union-find
/// over pairwise witnesses, so the result is a partition by construction.
inline std::vector<std::vector<long long>> merge_isometric(Family f) {
  std::vector<long long> params;
  std::vector<GramMatrix> grams;
  for (long long p : admissible_params(f)) {
    GramMatrix g = family_gram(f, p);
    if (lattice::has_short_root(g)) continue;
    params.push_back(p);
    grams.push_back(std::move(g));
  }
  std::vector<std::size_t> parent(params.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < params.size(); ++i)
    for (std::size_t j = i + 1; j < params.size(); ++j)
      if (find(i) != find(j) && lattice::are_isometric(grams[i], grams[j]))
        parent[find(j)] = find(i);
  std::map<std::size_t, std::vector<long long>> groups;
  for (std::size_t i = 0; i < params.size(); ++i) groups[find(i)].push_back(params[i]);
  std::vector<std::vector<long long>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

/// One report per admissible param, ascending. Params are classified in
/// parallel; results are collected in order so the output is deterministic.
inline std::vector<ComponentReport> classify_all(Family f) {
  const auto params = admissible_params(f);
  std::vector<std::future<ComponentReport>> jobs;
  for (long long p : params) jobs.push_back(std::async(std::launch::async, classify_param, f, p));
  std::vector<ComponentReport> reports;
  for (auto& j : jobs) reports.push_back(j.get());
  for (const auto& group : merge_isometric(f)) {
    for (auto& r : reports) {
      if (std::find(group.begin(), group.end(), r.param) == group.end()) continue;
      for (long long q : group)
        if (q != r.param) r.merged_with.push_back(q);
    }
  }
  return reports;
}

/// Statements the lattice computation does not reach; attached to every
/// classification output.
inline std::vector<std::string> classification_annotations() {
  return {
      "a nonempty verdict is lattice-side only: correspondence with a divisor component of the "
      "moduli space of cubic fourfolds is taken as given, not tested",
      "the specialization argument carrying rationality to the whole component is not verified",
      "overlattice scan covers cyclic glue U = (x'h^2 + y'P + S)/n only",
  };
}

}  // namespace cubiclab::classify

#endif  // CUBICLAB_CLASSIFY_CLASSIFIER_HPP
