#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "catwb/core/constructions.hpp"
#include "catwb/core/enumerate.hpp"
#include "catwb/core/fixtures.hpp"
#include "catwb/core/functor_category.hpp"
#include "catwb/core/graph.hpp"
#include "catwb/core/isomorphism.hpp"

namespace catwb::connectives {

enum class AmbientKind { categories, graphs };

inline const char* to_string(AmbientKind k) { return k == AmbientKind::categories ? "categories" : "graphs"; }

/// Discrete objects of an ambient (categories or graphs) with the coreflector
/// |−| right adjoint to the inclusion. For categories |W| keeps the objects
/// and drops every non-identity morphism; for graphs it drops every edge. The
/// inclusion is the identity on discrete objects, so only the coreflector,
/// unit and counit carry data.
struct DiscretenessInstance {
  AmbientKind kind = AmbientKind::categories;

  CatPtr coreflect(const CatPtr& w) const {
    require(AmbientKind::categories);
    return discrete_category(w->objects());
  }

  /// ε_W : |W| → W, identity on objects.
  Functor counit(const CatPtr& w) const {
    auto d = coreflect(w);
    Functor e{d, w, {}, {}};
    for (ObjId x = 0; x < d->num_objects(); ++x) {
      e.objects.push_back(x);
      e.morphisms.push_back(w->identity(x));
    }
    return e;
  }

  /// η_D : D → |D| for discrete D.
  Functor unit(const CatPtr& d) const {
    require(AmbientKind::categories);
    if (!d->is_discrete()) throw PreconditionError("discreteness unit: category is not discrete");
    auto e = coreflect(d);
    Functor u{d, e, {}, {}};
    for (ObjId x = 0; x < d->num_objects(); ++x) {
      u.objects.push_back(x);
      u.morphisms.push_back(e->identity(x));
    }
    return u;
  }

  FiniteGraph coreflect(const FiniteGraph& g) const {
    require(AmbientKind::graphs);
    return FiniteGraph(g.vertices(), {});
  }

  /// ε_G as a vertex map |G| → G.
  std::vector<std::size_t> counit(const FiniteGraph& g) const {
    require(AmbientKind::graphs);
    std::vector<std::size_t> v(g.num_vertices());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
    return v;
  }

  std::vector<std::size_t> unit(const FiniteGraph& d) const {
    if (d.num_edges() != 0) throw PreconditionError("discreteness unit: graph has edges");
    return counit(d);
  }

  /// Checks, for every discrete D in `discretes` and every W in `objects`:
  /// the inclusion is (2-)fully faithful on discretes, η_D is an isomorphism,
  /// φ ↦ ε_W ∘ φ is a bijection hom(D, |W|) ≅ hom(D, W), and ε is natural
  /// along every functor between members of `objects`.
  ValidationReport verify(const std::vector<CatPtr>& discretes, const std::vector<CatPtr>& objects,
                          EnumerationCap cap = {}) const {
    require(AmbientKind::categories);
    ValidationReport r;
    for (const auto& d : discretes) {
      if (!d->is_discrete()) {
        r.add("not-discrete", d->objects());
        continue;
      }
      if (!is_isomorphism(unit(d))) r.add("unit-not-iso", d->objects());
      for (const auto& d2 : discretes) {
        if (!d2->is_discrete()) continue;
        auto fc = functor_category(d, d2, cap);
        if (!fc.category->is_discrete()) r.add("inclusion-not-2-full", {std::to_string(d->num_objects()), std::to_string(d2->num_objects())});
      }
      for (const auto& w : objects) {
        auto eps = counit(w);
        auto direct = enumerate_functors(d, w, cap);
        auto via = enumerate_functors(d, coreflect(w), cap);
        std::vector<std::vector<ObjId>> lhs, rhs;
        for (const auto& f : direct) lhs.push_back(f.objects);
        for (const auto& f : via) rhs.push_back(compose(eps, f).objects);
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        if (lhs != rhs || std::adjacent_find(rhs.begin(), rhs.end()) != rhs.end())
          r.add("hom-bijection", {std::to_string(d->num_objects()), std::to_string(w->num_objects())});
      }
    }
    for (const auto& w : objects)
      for (const auto& w2 : objects)
        for (const auto& h : enumerate_functors(w, w2, cap)) {
          // |h| acts on objects only
          Functor bars{coreflect(w), coreflect(w2), h.objects, {}};
          for (ObjId x = 0; x < w->num_objects(); ++x) bars.morphisms.push_back(bars.target->identity(h.obj(x)));
          if (!(compose(counit(w2), bars) == compose(h, counit(w)))) r.add("counit-naturality", {});
        }
    return r;
  }

  ValidationReport verify(const std::vector<FiniteGraph>& discretes, const std::vector<FiniteGraph>& objects,
                          EnumerationCap cap = {}) const {
    require(AmbientKind::graphs);
    ValidationReport r;
    for (const auto& d : discretes) {
      if (d.num_edges() != 0) {
        r.add("not-discrete", d.vertices());
        continue;
      }
      for (const auto& d2 : discretes) {
        if (d2.num_edges() != 0) continue;
        // every vertex map between edgeless graphs is a graph map
        std::size_t expected = 1;
        for (std::size_t i = 0; i < d.num_vertices(); ++i) expected *= d2.num_vertices();
        if (enumerate_graph_homs(d, d2, cap).size() != expected) r.add("inclusion-not-full", {});
      }
      for (const auto& w : objects) {
        auto lhs = enumerate_graph_homs(d, w, cap);
        auto rhs = enumerate_graph_homs(d, coreflect(w), cap);
        auto eps = counit(w);
        for (auto& m : rhs)
          for (auto& v : m) v = eps[v];
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        if (lhs != rhs) r.add("hom-bijection", {});
      }
    }
    return r;
  }

 private:
  void require(AmbientKind k) const {
    if (kind != k) throw PreconditionError(std::string("discreteness instance is for ") + to_string(kind));
  }
};

inline DiscretenessInstance discreteness_instance(AmbientKind kind) { return DiscretenessInstance{kind}; }

/// C is canonically discrete iff for every probe P, every parallel pair of
/// functors P → C admits only the identity 2-cell (and only when equal).
inline bool canonical_discreteness_check(const CatPtr& c, std::vector<CatPtr> probes = {}, EnumerationCap cap = {}) {
  if (probes.empty()) probes = {terminal_category(), fixtures::two()};
  for (const auto& p : probes) {
    auto fs = enumerate_functors(p, c, cap);
    for (const auto& f : fs)
      for (const auto& g : fs) {
        auto cells = enumerate_nat_trans(f, g, cap);
        if (f == g ? cells.size() != 1 : !cells.empty()) return false;
      }
  }
  return true;
}

}  // namespace catwb::connectives
