#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catwb/core/cap.hpp"
#include "catwb/enriched/poset.hpp"
#include "catwb/kan/density.hpp"

namespace catwb::enriched {

/// Sentence sets as bit masks over Sen (bit k = sentence k).
using SentenceSet = std::uint64_t;

inline constexpr std::size_t kMaxSentences = 64;

struct SatisfactionRelation {
  std::vector<std::string> models;
  std::vector<std::string> sentences;
  std::vector<SentenceSet> rows;  // rows[M] = {φ : M ⊨ φ}

  SatisfactionRelation() = default;
  SatisfactionRelation(std::vector<std::string> mods, std::vector<std::string> sens,
                       const std::vector<std::vector<bool>>& matrix)
      : models(std::move(mods)), sentences(std::move(sens)) {
    if (sentences.size() > kMaxSentences) throw PreconditionError("satisfaction: more than 64 sentences");
    if (matrix.size() != models.size()) throw StructuralError("satisfaction: matrix needs one row per model");
    for (const auto& row : matrix) {
      if (row.size() != sentences.size()) throw StructuralError("satisfaction: matrix row has the wrong length");
      SentenceSet s = 0;
      for (std::size_t k = 0; k < row.size(); ++k)
        if (row[k]) s |= SentenceSet{1} << k;
      rows.push_back(s);
    }
  }

  bool satisfies(std::size_t model, std::size_t sentence) const { return (rows[model] >> sentence) & 1U; }
  SentenceSet all() const {
    return sentences.size() == 64 ? ~SentenceSet{0} : (SentenceSet{1} << sentences.size()) - 1;
  }

  std::size_t sentence(const std::string& name) const {
    auto it = std::find(sentences.begin(), sentences.end(), name);
    if (it == sentences.end()) throw PreconditionError("unknown sentence: " + name);
    return static_cast<std::size_t>(it - sentences.begin());
  }
  std::size_t model(const std::string& name) const {
    auto it = std::find(models.begin(), models.end(), name);
    if (it == models.end()) throw PreconditionError("unknown model: " + name);
    return static_cast<std::size_t>(it - models.begin());
  }

  SentenceSet set_of(const std::vector<std::string>& names) const {
    SentenceSet s = 0;
    for (const auto& n : names) s |= SentenceSet{1} << sentence(n);
    return s;
  }
  std::vector<std::string> names_of(SentenceSet s) const {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < sentences.size(); ++k)
      if ((s >> k) & 1U) out.push_back(sentences[k]);
    return out;
  }
  std::string format(SentenceSet s) const {
    std::string out = "{";
    bool first = true;
    for (const auto& n : names_of(s)) {
      if (!first) out += ",";
      first = false;
      out += n;
    }
    return out + "}";
  }
};

/// th(M) = {φ : M ⊨ φ}, per model.
inline std::vector<SentenceSet> theory_map(const SatisfactionRelation& sat) { return sat.rows; }

/// Γ ⊨ ψ: every model of Γ satisfies ψ.
inline bool semantic_consequence(const SatisfactionRelation& sat, SentenceSet gamma, std::size_t psi) {
  if (psi >= sat.sentences.size()) throw PreconditionError("semantic_consequence: sentence index out of range");
  if (gamma & ~sat.all()) throw PreconditionError("semantic_consequence: set mentions unknown sentences");
  for (std::size_t m = 0; m < sat.models.size(); ++m)
    if ((gamma & ~sat.rows[m]) == 0 && !sat.satisfies(m, psi)) return false;
  return true;
}

inline bool semantic_consequence(const SatisfactionRelation& sat, const std::vector<std::string>& gamma,
                                 const std::string& psi) {
  return semantic_consequence(sat, sat.set_of(gamma), sat.sentence(psi));
}

/// T as a table over all 2^|Sen| sentence sets.
struct ClosureOperator {
  std::size_t sentences = 0;
  std::vector<SentenceSet> table;

  SentenceSet operator()(SentenceSet s) const { return table.at(s); }
  std::size_t carrier_size() const { return table.size(); }
};

inline ValidationReport check_closure_laws(const ClosureOperator& t) {
  ValidationReport r;
  auto subset = [](SentenceSet a, SentenceSet b) { return (a & ~b) == 0; };
  const auto n = static_cast<SentenceSet>(t.carrier_size());
  for (SentenceSet g = 0; g < n; ++g) {
    if (!subset(g, t(g))) r.add("extensive", {std::to_string(g)});
    if (t(t(g)) != t(g)) r.add("idempotent", {std::to_string(g)});
    // monotonicity only needs the covering relation g ⊂ g ∪ {k}
    for (std::size_t k = 0; k < t.sentences; ++k) {
      SentenceSet h = g | (SentenceSet{1} << k);
      if (h != g && !subset(t(g), t(h))) r.add("monotone", {std::to_string(g), std::to_string(h)});
    }
  }
  return r;
}

namespace detail {

inline void require_table_size(const SatisfactionRelation& sat, EnumerationCap cap) {
  if (sat.sentences.size() >= 40 || (std::uint64_t{1} << sat.sentences.size()) > cap.limit)
    throw ResourceError("density_product", cap.limit, std::uint64_t{1} << std::min<std::size_t>(sat.sentences.size(), 63));
}

}  // namespace detail

/// End formula: T(Γ)(ψ) = ⋀_M th(M)(ψ)^{hom(Γ, th M)}, where the exponent
/// is 1 exactly when Γ ⊆ th(M) and x^0 = 1.
inline SentenceSet end_formula(const SatisfactionRelation& sat, SentenceSet gamma) {
  SentenceSet out = 0;
  for (std::size_t psi = 0; psi < sat.sentences.size(); ++psi) {
    bool value = true;
    for (std::size_t m = 0; m < sat.models.size(); ++m) {
      const bool hom = (gamma & ~sat.rows[m]) == 0;
      value = value && (!hom || sat.satisfies(m, psi));
    }
    if (value) out |= SentenceSet{1} << psi;
  }
  return out;
}

/// Galois side: T(Γ) = ⋂ {th(M) : Γ ⊆ th(M)}, the empty meet being Sen.
inline SentenceSet galois_closure(const SatisfactionRelation& sat, SentenceSet gamma) {
  SentenceSet out = sat.all();
  for (auto th : sat.rows)
    if ((gamma & ~th) == 0) out &= th;
  return out;
}

inline ClosureOperator density_product(const SatisfactionRelation& sat, EnumerationCap cap = {}) {
  detail::require_table_size(sat, cap);
  ClosureOperator t;
  t.sentences = sat.sentences.size();
  const SentenceSet n = SentenceSet{1} << t.sentences;
  t.table.reserve(n);
  for (SentenceSet g = 0; g < n; ++g) t.table.push_back(end_formula(sat, g));
  return t;
}

// ---------------------------------------------------------------------------
// Cross-check on the powerset poset

/// 2^Sen ordered by inclusion, element g named by its format.
inline FinitePoset powerset_poset(const SatisfactionRelation& sat) {
  const SentenceSet n = SentenceSet{1} << sat.sentences.size();
  FinitePoset p;
  for (SentenceSet g = 0; g < n; ++g) p.names.push_back(sat.format(g));
  p.leq.assign(n, std::vector<bool>(n));
  for (SentenceSet a = 0; a < n; ++a)
    for (SentenceSet b = 0; b < n; ++b) p.leq[a][b] = (a & ~b) == 0;
  return p;
}

/// th : Mod → 2^Sen with Mod discrete.
inline MonotoneMap theory_monotone(const SatisfactionRelation& sat) {
  FinitePoset mod;
  mod.names = sat.models;
  mod.leq.assign(sat.models.size(), std::vector<bool>(sat.models.size()));
  for (std::size_t m = 0; m < sat.models.size(); ++m) mod.leq[m][m] = true;
  MonotoneMap th{mod, powerset_poset(sat), {}};
  for (auto r : sat.rows) th.values.push_back(static_cast<std::size_t>(r));
  return th;
}

struct DensityCrossCheck {
  bool poset_kan_agrees = false;     // Ran_th th via poset meets
  bool density_monad_agrees = false; // codensity monad of th on the thin category
  bool monad_laws = false;
  bool closure_laws = false;
  std::vector<SentenceSet> mismatches;
};

/// Compares density_product with the right Kan extension of th along itself,
/// both as a poset meet and through the general codensity monad.
inline DensityCrossCheck density_cross_check(const SatisfactionRelation& sat, EnumerationCap cap = {}) {
  if (sat.sentences.size() > 4) throw PreconditionError("density_cross_check: at most 4 sentences");
  DensityCrossCheck r;
  auto t = density_product(sat, cap);
  r.closure_laws = check_closure_laws(t).ok();

  auto th = theory_monotone(sat);
  auto ran = poset_kan(th, th, kan::Side::right);
  if (!ran) throw InternalInconsistency("density_cross_check: powerset lacks a meet");
  r.poset_kan_agrees = true;
  for (std::size_t g = 0; g < t.carrier_size(); ++g)
    if ((*ran)(g) != t(g)) {
      r.poset_kan_agrees = false;
      r.mismatches.push_back(g);
    }

  auto power = as_category(th.target);
  auto functor = as_functor(th, as_category(th.source), power);
  auto monad = kan::density_monad(functor, kan::DensityKind::monad, cap);
  if (!monad) return r;
  r.monad_laws = monad->laws.ok();
  r.density_monad_agrees = true;
  for (SentenceSet g = 0; g < t.carrier_size(); ++g) {
    ObjId o = power->object(sat.format(g));
    if (power->object_name(monad->endofunctor.obj(o)) != sat.format(t(g))) {
      r.density_monad_agrees = false;
      r.mismatches.push_back(g);
    }
  }
  return r;
}

}  // namespace catwb::enriched
