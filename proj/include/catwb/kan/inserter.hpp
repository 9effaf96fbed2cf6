#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catwb/core/constructions.hpp"
#include "catwb/core/enumerate.hpp"
#include "catwb/core/fixtures.hpp"
#include "catwb/core/keyed_builder.hpp"

namespace catwb::kan {

/// Inserter of f, g : A → B. Objects are pairs (a, α : f a → g a); a morphism
/// (a, α) → (a', α') is γ : a → a' with g γ ∘ α = α' ∘ f γ.
struct InserterResult {
  CatPtr category;
  Functor f;
  Functor g;
  Functor inclusion;           // i : I → A
  NaturalTransformation cell;  // π : f∘i ⇒ g∘i
  std::vector<std::pair<ObjId, MorId>> pairs;  // (a, α) for each object of I

  std::optional<ObjId> object_of(ObjId a, MorId alpha) const {
    for (ObjId x = 0; x < pairs.size(); ++x)
      if (pairs[x].first == a && pairs[x].second == alpha) return x;
    return std::nullopt;
  }
};

inline InserterResult inserter(const Functor& f, const Functor& g) {
  if (!parallel(f, g)) throw PreconditionError("inserter: functors are not parallel");
  const auto& A = *f.source;
  const auto& B = *f.target;

  KeyedCategoryBuilder kb;
  std::vector<std::pair<ObjId, MorId>> pairs;
  std::vector<std::string> names;
  for (ObjId a = 0; a < A.num_objects(); ++a)
    for (MorId alpha : B.hom(f.obj(a), g.obj(a))) {
      pairs.emplace_back(a, alpha);
      names.push_back("(" + A.object_name(a) + "," + B.morphism_name(alpha) + ")");
      kb.add_object(names.back());
    }
  std::vector<std::pair<std::string, MorId>> added;
  for (ObjId s = 0; s < pairs.size(); ++s)
    for (ObjId t = 0; t < pairs.size(); ++t)
      for (MorId gamma : A.hom(pairs[s].first, pairs[t].first)) {
        if (B.compose(g.mor(gamma), pairs[s].second) != B.compose(pairs[t].second, f.mor(gamma))) continue;
        if (s == t && A.is_identity(gamma)) {
          kb.add_identity(s, {gamma});
          added.emplace_back("id_" + names[s], gamma);
        } else {
          added.emplace_back(A.morphism_name(gamma) + ":" + names[s] + ">" + names[t], gamma);
          kb.add_morphism(added.back().first, s, t, {gamma});
        }
      }

  InserterResult r;
  r.f = f;
  r.g = g;
  r.category = make_cat(std::move(kb).build(
      [&](const auto& kg, const auto& kf) { return std::vector<std::uint32_t>{A.compose(kg[0], kf[0])}; }));
  const auto& I = *r.category;
  r.pairs.resize(I.num_objects());
  for (ObjId s = 0; s < pairs.size(); ++s) r.pairs[I.object(names[s])] = pairs[s];
  r.inclusion = Functor{r.category, f.source, {}, std::vector<MorId>(I.num_morphisms())};
  for (const auto& [a, alpha] : r.pairs) r.inclusion.objects.push_back(a);
  for (const auto& [name, gamma] : added) r.inclusion.morphisms[I.morphism(name)] = gamma;
  r.cell = NaturalTransformation{compose(f, r.inclusion), compose(g, r.inclusion), {}};
  for (const auto& [a, alpha] : r.pairs) r.cell.components.push_back(alpha);
  return r;
}

/// The unique k : J → I with i∘k = h and π k = β, for h : J → A and
/// β : f∘h ⇒ g∘h.
inline Functor inserter_factor(const InserterResult& ins, const Functor& h, const NaturalTransformation& beta) {
  const auto& J = *h.source;
  const auto& I = *ins.category;
  Functor k{h.source, ins.category, {}, {}};
  for (ObjId j = 0; j < J.num_objects(); ++j) {
    auto x = ins.object_of(h.obj(j), beta.at(j));
    if (!x) throw PreconditionError("inserter_factor: β is not a 2-cell f∘h ⇒ g∘h");
    k.objects.push_back(*x);
  }
  for (MorId u = 0; u < J.num_morphisms(); ++u) {
    MorId found = kNoId;
    for (MorId m : I.hom(k.obj(J.dom(u)), k.obj(J.cod(u))))
      if (ins.inclusion.mor(m) == h.mor(u)) found = m;
    if (found == kNoId) throw PreconditionError("inserter_factor: β is not natural");
    k.morphisms.push_back(found);
  }
  return k;
}

struct InserterUniversality {
  bool ok = true;
  std::size_t probes = 0;  // (h, β) pairs checked
  std::vector<std::string> failures;
};

/// For each probe category J, every (h : J → A, β : f h ⇒ g h) must have
/// exactly one k : J → I with i∘k = h and π k = β, and that k must agree with
/// inserter_factor.
inline InserterUniversality verify_inserter(const InserterResult& ins, std::vector<CatPtr> probes = {},
                                            EnumerationCap cap = {}) {
  if (probes.empty()) probes = {terminal_category(), fixtures::two()};
  InserterUniversality out;
  for (const auto& J : probes) {
    auto into_i = enumerate_functors(J, ins.category, cap);
    for (const auto& h : enumerate_functors(J, ins.f.source, cap)) {
      for (const auto& beta : enumerate_nat_trans(compose(ins.f, h), compose(ins.g, h), cap)) {
        ++out.probes;
        std::size_t count = 0;
        std::optional<Functor> unique;
        for (const auto& k : into_i) {
          if (!(compose(ins.inclusion, k).objects == h.objects) ||
              !(compose(ins.inclusion, k).morphisms == h.morphisms))
            continue;
          if (whisker_left(ins.cell, k).components != beta.components) continue;
          ++count;
          unique = k;
        }
        if (count != 1 || !(inserter_factor(ins, h, beta) == *unique)) {
          out.ok = false;
          out.failures.push_back("probe " + std::to_string(out.probes) + ": " + std::to_string(count) +
                                 " factorizations");
        }
      }
    }
  }
  return out;
}

}  // namespace catwb::kan
