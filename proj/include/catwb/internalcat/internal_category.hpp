#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "catwb/connectives/discreteness.hpp"
#include "catwb/core/functor_category.hpp"
#include "catwb/kan/inserter.hpp"

namespace catwb::internalcat {

/// A category internal to finite sets. m is stored as a dense |A1| × |A1|
/// table m[g][f], defined exactly on A2 = {(g, f) : dom g = cod f}.
struct InternalCategory {
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::vector<std::string> objects;  // A0
  std::vector<std::string> arrows;   // A1
  std::vector<std::size_t> dom, cod;
  std::vector<std::size_t> e;
  std::vector<std::vector<std::size_t>> m;

  std::size_t compose(std::size_t g, std::size_t f) const { return m.at(g).at(f); }

  /// A2 in lexicographic order of (g, f).
  std::vector<std::pair<std::size_t, std::size_t>> composable() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t g = 0; g < arrows.size(); ++g)
      for (std::size_t f = 0; f < arrows.size(); ++f)
        if (dom[g] == cod[f]) out.emplace_back(g, f);
    return out;
  }

  friend bool operator==(const InternalCategory&, const InternalCategory&) = default;
};

inline ValidationReport validate_internal(const InternalCategory& a) {
  ValidationReport r;
  const auto n0 = a.objects.size(), n1 = a.arrows.size();
  if (a.dom.size() != n1 || a.cod.size() != n1 || a.e.size() != n0 || a.m.size() != n1) {
    r.add("shape", {});
    return r;
  }
  for (const auto& row : a.m)
    if (row.size() != n1) {
      r.add("shape", {"m"});
      return r;
    }
  for (std::size_t f = 0; f < n1; ++f)
    if (a.dom[f] >= n0 || a.cod[f] >= n0) r.add("total-dom-cod", {a.arrows[f]});
  for (std::size_t x = 0; x < n0; ++x)
    if (a.e[x] >= n1) r.add("total-e", {a.objects[x]});
  if (!r.ok()) return r;
  for (std::size_t x = 0; x < n0; ++x)
    if (a.dom[a.e[x]] != x || a.cod[a.e[x]] != x) r.add("identity-typing", {a.objects[x]});
  for (std::size_t g = 0; g < n1; ++g)
    for (std::size_t f = 0; f < n1; ++f) {
      const auto h = a.m[g][f];
      if (a.dom[g] != a.cod[f]) {
        if (h != InternalCategory::kNone) r.add("composite-outside-A2", {a.arrows[g], a.arrows[f]});
        continue;
      }
      if (h >= n1) {
        r.add("missing-composite", {a.arrows[g], a.arrows[f]});
        continue;
      }
      if (a.dom[h] != a.dom[f] || a.cod[h] != a.cod[g]) r.add("composite-typing", {a.arrows[g], a.arrows[f]});
    }
  if (!r.ok()) return r;
  for (std::size_t f = 0; f < n1; ++f) {
    if (a.m[a.e[a.cod[f]]][f] != f) r.add("left-unit", {a.arrows[f]});
    if (a.m[f][a.e[a.dom[f]]] != f) r.add("right-unit", {a.arrows[f]});
  }
  for (auto [g, f] : a.composable())
    for (std::size_t h = 0; h < n1; ++h)
      if (a.dom[h] == a.cod[g] && a.m[h][a.m[g][f]] != a.m[a.m[h][g]][f])
        r.add("associativity", {a.arrows[h], a.arrows[g], a.arrows[f]});
  return r;
}

/// The result of the associated-category construction together with the
/// diagram it was computed from.
struct AssociatedCategory {
  InternalCategory internal;
  CatPtr discrete_objects;        // |A|
  CatPtr discrete_pairs;          // |A × A|
  kan::InserterResult inserter;   // of ε∘π₀, ε∘π₁ : |A × A| → A
  Functor identity_map;           // |A| → inserter, induced by the identity 2-cell on ε∘|Δ|
  Functor composition_map;        // A2 → inserter
};

/// A0 = |A|; A1 = the inserter of |A × A| ⇉ |A| → A; e and m are the
/// factorizations through the inserter of the identity cell along |Δ_A| and
/// of the composite cell on the pullback A2. Elements of A1 are labelled by
/// the morphism of A their inserter 2-cell picks out.
inline AssociatedCategory associated_category(const CatPtr& a) {
  const auto& A = *a;
  const auto inst = connectives::discreteness_instance(connectives::AmbientKind::categories);
  AssociatedCategory out;
  out.discrete_objects = inst.coreflect(a);
  auto sq = product_category(a, a);
  out.discrete_pairs = inst.coreflect(sq.category);
  const auto& P = *out.discrete_pairs;
  auto eps = inst.counit(a);

  // ε∘π₀ and ε∘π₁ on |A × A|; |A × A| has the objects of A × A in the same order
  Functor f{out.discrete_pairs, a, {}, {}}, g{out.discrete_pairs, a, {}, {}};
  for (ObjId o = 0; o < P.num_objects(); ++o) {
    auto [x, y] = sq.object_components[o];
    f.objects.push_back(eps.obj(x));
    g.objects.push_back(eps.obj(y));
    f.morphisms.push_back(A.identity(x));
    g.morphisms.push_back(A.identity(y));
  }
  out.inserter = kan::inserter(f, g);
  const auto& I = *out.inserter.category;
  if (!I.is_discrete()) throw InternalInconsistency("associated_category: inserter over a discrete object is not discrete");

  auto& r = out.internal;
  r.objects = A.objects();
  for (ObjId k = 0; k < I.num_objects(); ++k) r.arrows.push_back(A.morphism_name(out.inserter.pairs[k].second));
  // relabel A1 so that its order follows the morphism names
  std::vector<ObjId> order(I.num_objects());
  for (ObjId k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](ObjId x, ObjId y) { return r.arrows[x] < r.arrows[y]; });
  std::vector<std::size_t> pos(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
  std::vector<std::string> sorted;
  for (auto k : order) sorted.push_back(r.arrows[k]);
  r.arrows = std::move(sorted);
  const auto n1 = r.arrows.size();
  r.dom.resize(n1);
  r.cod.resize(n1);
  for (ObjId k = 0; k < I.num_objects(); ++k) {
    auto [x, y] = sq.object_components[out.inserter.pairs[k].first];
    r.dom[pos[k]] = x;
    r.cod[pos[k]] = y;
  }

  // e : |A| → A1 from |Δ_A| : |A| → |A × A| and the identity 2-cell
  const auto& D0 = out.discrete_objects;
  Functor diag{D0, out.discrete_pairs, {}, {}};
  NaturalTransformation unit_cell{{}, {}, {}};
  for (ObjId x = 0; x < D0->num_objects(); ++x) {
    diag.objects.push_back(sq.object(x, x));
    diag.morphisms.push_back(P.identity(sq.object(x, x)));
    unit_cell.components.push_back(A.identity(x));
  }
  unit_cell.source = compose(f, diag);
  unit_cell.target = compose(g, diag);
  out.identity_map = kan::inserter_factor(out.inserter, diag, unit_cell);
  r.e.resize(D0->num_objects());
  for (ObjId x = 0; x < D0->num_objects(); ++x) r.e[x] = pos[out.identity_map.obj(x)];

  // A2 = {(q, p) : dom q = cod p} with its pullback legs p₁ (the later arrow)
  // and p₂ (the earlier one). The 2-cell is α p₁ • α p₂ from ε∘dom∘p₂ to
  // ε∘cod∘p₁, and the map into |A × A| is ⟨dom∘p₂, cod∘p₁⟩.
  std::vector<std::pair<std::size_t, std::size_t>> a2;
  std::vector<std::string> a2_names;
  for (std::size_t q = 0; q < n1; ++q)
    for (std::size_t p = 0; p < n1; ++p)
      if (r.dom[q] == r.cod[p]) {
        a2.emplace_back(q, p);
        a2_names.push_back("(" + r.arrows[q] + "," + r.arrows[p] + ")");
      }
  auto A2 = discrete_category(a2_names);
  Functor pair_map{A2, out.discrete_pairs, {}, {}};
  NaturalTransformation comp_cell{{}, {}, {}};
  std::vector<std::size_t> a2_of(A2->num_objects());
  for (std::size_t k = 0; k < a2.size(); ++k) a2_of[A2->object(a2_names[k])] = k;
  for (ObjId z = 0; z < A2->num_objects(); ++z) {
    auto [q, p] = a2[a2_of[z]];
    ObjId o = sq.object(static_cast<ObjId>(r.dom[p]), static_cast<ObjId>(r.cod[q]));
    pair_map.objects.push_back(o);
    pair_map.morphisms.push_back(P.identity(o));
    comp_cell.components.push_back(A.compose(A.morphism(r.arrows[q]), A.morphism(r.arrows[p])));
  }
  comp_cell.source = compose(f, pair_map);
  comp_cell.target = compose(g, pair_map);
  out.composition_map = kan::inserter_factor(out.inserter, pair_map, comp_cell);
  r.m.assign(n1, std::vector<std::size_t>(n1, InternalCategory::kNone));
  for (ObjId z = 0; z < A2->num_objects(); ++z) {
    auto [q, p] = a2[a2_of[z]];
    r.m[q][p] = pos[out.composition_map.obj(z)];
  }
  return out;
}

inline CatPtr internal_to_category(const InternalCategory& a) {
  auto report = validate_internal(a);
  if (!report.ok()) throw PreconditionError("internal_to_category: " + report.summary());
  CategoryBuilder b;
  for (const auto& x : a.objects) b.add_object(x);
  for (std::size_t f = 0; f < a.arrows.size(); ++f)
    b.add_morphism(a.arrows[f], static_cast<ObjId>(a.dom[f]), static_cast<ObjId>(a.cod[f]));
  for (std::size_t x = 0; x < a.objects.size(); ++x) b.set_identity(static_cast<ObjId>(x), static_cast<MorId>(a.e[x]));
  return make_cat(std::move(b).build([&](MorId g, MorId f) -> MorId {
    auto h = a.m[g][f];
    return h == InternalCategory::kNone ? kNoId : static_cast<MorId>(h);
  }));
}

/// A discrete internal category on a set: A1 is the image of e.
inline InternalCategory discrete_internal(const std::vector<std::string>& names) {
  InternalCategory a;
  a.objects = names;
  const auto n = names.size();
  for (std::size_t x = 0; x < n; ++x) {
    a.arrows.push_back("id_" + names[x]);
    a.dom.push_back(x);
    a.cod.push_back(x);
    a.e.push_back(x);
  }
  a.m.assign(n, std::vector<std::size_t>(n, InternalCategory::kNone));
  for (std::size_t x = 0; x < n; ++x) a.m[x][x] = x;
  return a;
}

/// ⟨dom, cod⟩ : A1 → A0 × A0 is injective.
inline bool internal_poset_check(const InternalCategory& a) {
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t f = 0; f < a.arrows.size(); ++f) ends.emplace_back(a.dom[f], a.cod[f]);
  std::sort(ends.begin(), ends.end());
  return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

struct PosetalityReport {
  bool posetal = true;                 // every hom(X, C) thin
  std::vector<std::string> failing;    // generators whose functor category is not thin
  bool internal_poset = false;         // internal_poset_check(associated_category(C))
  bool cross_checked = false;          // generators contain the terminal category
  bool agree = true;                   // cross_checked ⇒ posetal == internal_poset
};

/// C is representably posetal over the generators iff each functor category
/// [X, C] has at most one morphism between any two objects.
inline PosetalityReport representably_posetal_check(const CatPtr& c, std::vector<CatPtr> generators = {},
                                                    EnumerationCap cap = {}) {
  if (generators.empty()) generators = {terminal_category()};
  PosetalityReport r;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& x = generators[k];
    if (x->num_objects() == 1 && x->num_morphisms() == 1) r.cross_checked = true;
    if (!functor_category(x, c, cap).category->is_thin()) {
      r.posetal = false;
      r.failing.push_back("generator " + std::to_string(k));
    }
  }
  r.internal_poset = internal_poset_check(associated_category(c).internal);
  r.agree = !r.cross_checked || r.posetal == r.internal_poset;
  return r;
}

}  // namespace catwb::internalcat
