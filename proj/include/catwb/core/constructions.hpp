#pragma once

#include <string>
#include <utility>
#include <vector>

#include "catwb/core/functor.hpp"

namespace catwb {

inline CatPtr discrete_category(const std::vector<std::string>& names) {
  CategoryBuilder b;
  for (const auto& n : names) b.add_identity(b.add_object(n));
  return make_cat(std::move(b).build());
}

/// The category with one object `*` and its identity.
inline CatPtr terminal_category() { return discrete_category({"*"}); }

inline CatPtr initial_category() { return make_cat(FiniteCategory{}); }

inline CatPtr opposite(const FiniteCategory& c) {
  CategoryBuilder b;
  for (const auto& o : c.objects()) b.add_object(o);
  for (const auto& a : c.arrows()) b.add_morphism(a.name, a.cod, a.dom);
  for (ObjId x = 0; x < c.num_objects(); ++x) b.set_identity(x, c.identity(x));
  // builder indices coincide with c's indices
  return make_cat(std::move(b).build([&](MorId g, MorId f) { return c.try_compose(f, g); }));
}

inline CatPtr opposite(const CatPtr& c) { return opposite(*c); }

/// !: A → 1
inline Functor terminal_functor(const CatPtr& a) { return constant_functor(a, terminal_category(), 0); }

/// The functor 1 → C picking object c.
inline Functor object_picker(const CatPtr& c, ObjId x) { return constant_functor(terminal_category(), c, x); }

// ---------------------------------------------------------------------------
// Binary products

struct Product {
  CatPtr category;
  CatPtr left;
  CatPtr right;
  std::vector<ObjId> pair_objects;    // [a * |right objects| + b]
  std::vector<MorId> pair_morphisms;  // [f * |right morphisms| + g]
  std::vector<std::pair<ObjId, ObjId>> object_components;
  std::vector<std::pair<MorId, MorId>> morphism_components;
  Functor proj_left;
  Functor proj_right;

  ObjId object(ObjId a, ObjId b) const { return pair_objects[a * right->num_objects() + b]; }
  MorId morphism(MorId f, MorId g) const { return pair_morphisms[f * right->num_morphisms() + g]; }
};

inline Product product_category(const CatPtr& c, const CatPtr& d) {
  const auto nco = static_cast<std::uint32_t>(c->num_objects());
  const auto ndo = static_cast<std::uint32_t>(d->num_objects());
  const auto ncm = static_cast<std::uint32_t>(c->num_morphisms());
  const auto ndm = static_cast<std::uint32_t>(d->num_morphisms());

  CategoryBuilder b;
  for (ObjId a = 0; a < nco; ++a)
    for (ObjId x = 0; x < ndo; ++x) b.add_object("(" + c->object_name(a) + "," + d->object_name(x) + ")");
  for (MorId f = 0; f < ncm; ++f)
    for (MorId g = 0; g < ndm; ++g) {
      ObjId dom = c->dom(f) * ndo + d->dom(g);
      ObjId cod = c->cod(f) * ndo + d->cod(g);
      if (c->is_identity(f) && d->is_identity(g)) {
        b.add_morphism("id_" + b.object_name(dom), dom, cod);
        b.set_identity(dom, f * ndm + g);
      } else {
        b.add_morphism("(" + c->morphism_name(f) + "," + d->morphism_name(g) + ")", dom, cod);
      }
    }

  Product p;
  p.left = c;
  p.right = d;
  p.category = make_cat(std::move(b).build([&](MorId g2, MorId f2) -> MorId {
    MorId h1 = c->try_compose(g2 / ndm, f2 / ndm);
    MorId h2 = d->try_compose(g2 % ndm, f2 % ndm);
    if (h1 == kNoId || h2 == kNoId) return kNoId;
    return h1 * ndm + h2;
  }));
  const auto& pc = *p.category;

  p.pair_objects.resize(std::size_t{nco} * ndo);
  p.object_components.resize(pc.num_objects());
  for (ObjId a = 0; a < nco; ++a)
    for (ObjId x = 0; x < ndo; ++x) {
      ObjId o = pc.object("(" + c->object_name(a) + "," + d->object_name(x) + ")");
      p.pair_objects[a * ndo + x] = o;
      p.object_components[o] = {a, x};
    }
  p.pair_morphisms.resize(std::size_t{ncm} * ndm);
  p.morphism_components.resize(pc.num_morphisms());
  for (MorId f = 0; f < ncm; ++f)
    for (MorId g = 0; g < ndm; ++g) {
      // Morphisms between a fixed pair of objects are ordered by name, so the
      // image of (f, g) is recovered from the hom-set by name.
      ObjId dom = p.pair_objects[c->dom(f) * ndo + d->dom(g)];
      MorId m;
      if (c->is_identity(f) && d->is_identity(g)) {
        m = pc.identity(dom);
      } else {
        m = pc.morphism("(" + c->morphism_name(f) + "," + d->morphism_name(g) + ")");
      }
      p.pair_morphisms[f * ndm + g] = m;
      p.morphism_components[m] = {f, g};
    }

  p.proj_left = Functor{p.category, c, {}, {}};
  p.proj_right = Functor{p.category, d, {}, {}};
  for (const auto& [a, x] : p.object_components) {
    p.proj_left.objects.push_back(a);
    p.proj_right.objects.push_back(x);
  }
  for (const auto& [f, g] : p.morphism_components) {
    p.proj_left.morphisms.push_back(f);
    p.proj_right.morphisms.push_back(g);
  }
  return p;
}

/// ⟨F, G⟩ : X → C × D
inline Functor pairing(const Functor& f, const Functor& g, const Product& p) {
  if (!same_category(f.source, g.source)) throw PreconditionError("pairing: functors have different sources");
  Functor h{f.source, p.category, {}, {}};
  for (std::size_t x = 0; x < f.objects.size(); ++x) h.objects.push_back(p.object(f.objects[x], g.objects[x]));
  for (std::size_t m = 0; m < f.morphisms.size(); ++m)
    h.morphisms.push_back(p.morphism(f.morphisms[m], g.morphisms[m]));
  return h;
}

/// F × G : A × B → C × D
inline Functor product_functor(const Functor& f, const Functor& g, const Product& dom, const Product& cod) {
  Functor h{dom.category, cod.category, {}, {}};
  for (const auto& [a, b] : dom.object_components) h.objects.push_back(cod.object(f.objects[a], g.objects[b]));
  for (const auto& [u, v] : dom.morphism_components)
    h.morphisms.push_back(cod.morphism(f.morphisms[u], g.morphisms[v]));
  return h;
}

/// Δ : A → A × A
inline Functor diagonal(const Product& p) {
  auto id = identity_functor(p.left);
  return pairing(id, id, p);
}

// ---------------------------------------------------------------------------
// Coproducts

struct Coproduct {
  CatPtr category;
  std::vector<CatPtr> summands;
  std::vector<std::string> tags;
  std::vector<Functor> injections;
  std::vector<std::pair<std::uint32_t, ObjId>> object_origin;
  std::vector<std::pair<std::uint32_t, MorId>> morphism_origin;
};

/// Disjoint union; summand k's ids are prefixed with `tags[k] + "."`.
inline Coproduct coproduct_category(const std::vector<CatPtr>& summands, std::vector<std::string> tags = {}) {
  if (tags.empty())
    for (std::size_t k = 0; k < summands.size(); ++k) tags.push_back(std::to_string(k));
  if (tags.size() != summands.size()) throw PreconditionError("coproduct_category: tag count mismatch");

  CategoryBuilder b;
  std::vector<std::uint32_t> obj_base, mor_base;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    obj_base.push_back(static_cast<std::uint32_t>(b.num_objects()));
    for (const auto& o : summands[k]->objects()) b.add_object(tags[k] + "." + o);
  }
  for (std::size_t k = 0; k < summands.size(); ++k) {
    const auto& c = *summands[k];
    mor_base.push_back(static_cast<std::uint32_t>(b.num_morphisms()));
    for (MorId m = 0; m < c.num_morphisms(); ++m) {
      ObjId dom = obj_base[k] + c.dom(m);
      ObjId cod = obj_base[k] + c.cod(m);
      if (c.is_identity(m)) {
        MorId id = b.add_morphism("id_" + b.object_name(dom), dom, cod);
        b.set_identity(dom, id);
      } else {
        b.add_morphism(tags[k] + "." + c.morphism_name(m), dom, cod);
      }
    }
  }
  std::vector<std::pair<std::uint32_t, MorId>> origin;
  for (std::size_t k = 0; k < summands.size(); ++k)
    for (MorId m = 0; m < summands[k]->num_morphisms(); ++m) origin.emplace_back(k, m);

  Coproduct cp;
  cp.summands = summands;
  cp.tags = tags;
  cp.category = make_cat(std::move(b).build([&](MorId g, MorId f) -> MorId {
    auto [kg, mg] = origin[g];
    auto [kf, mf] = origin[f];
    if (kg != kf) return kNoId;
    MorId h = summands[kg]->try_compose(mg, mf);
    return h == kNoId ? kNoId : mor_base[kg] + h;
  }));
  const auto& c = *cp.category;
  cp.object_origin.resize(c.num_objects());
  cp.morphism_origin.resize(c.num_morphisms());
  for (std::size_t k = 0; k < summands.size(); ++k) {
    const auto& s = *summands[k];
    Functor inj{summands[k], cp.category, {}, {}};
    for (ObjId x = 0; x < s.num_objects(); ++x) {
      ObjId o = c.object(tags[k] + "." + s.object_name(x));
      inj.objects.push_back(o);
      cp.object_origin[o] = {static_cast<std::uint32_t>(k), x};
    }
    for (MorId m = 0; m < s.num_morphisms(); ++m) {
      MorId n = s.is_identity(m) ? c.identity(inj.objects[s.dom(m)]) : c.morphism(tags[k] + "." + s.morphism_name(m));
      inj.morphisms.push_back(n);
      cp.morphism_origin[n] = {static_cast<std::uint32_t>(k), m};
    }
    cp.injections.push_back(std::move(inj));
  }
  return cp;
}

/// [F_0, ..., F_n] : ⊔ X_k → C
inline Functor cotuple(const Coproduct& cp, const std::vector<Functor>& legs, const CatPtr& target) {
  if (legs.size() != cp.summands.size()) throw PreconditionError("cotuple: leg count mismatch");
  Functor h{cp.category, target, {}, {}};
  for (const auto& [k, x] : cp.object_origin) h.objects.push_back(legs[k].objects[x]);
  for (const auto& [k, m] : cp.morphism_origin) h.morphisms.push_back(legs[k].morphisms[m]);
  return h;
}

/// Full subcategory on the given objects, with its inclusion functor.
inline std::pair<CatPtr, Functor> full_subcategory(const CatPtr& c, const std::vector<ObjId>& objects) {
  CategoryBuilder b;
  std::vector<ObjId> local(c->num_objects(), kNoId);
  for (ObjId x : objects)
    if (local[x] == kNoId) local[x] = b.add_object(c->object_name(x));
  std::vector<MorId> origin;
  for (MorId m = 0; m < c->num_morphisms(); ++m) {
    if (local[c->dom(m)] == kNoId || local[c->cod(m)] == kNoId) continue;
    MorId k = b.add_morphism(c->morphism_name(m), local[c->dom(m)], local[c->cod(m)]);
    if (c->is_identity(m)) b.set_identity(local[c->dom(m)], k);
    origin.push_back(m);
  }
  std::vector<MorId> back(c->num_morphisms(), kNoId);
  for (MorId k = 0; k < origin.size(); ++k) back[origin[k]] = k;
  auto sub = make_cat(std::move(b).build([&](MorId g, MorId f) { return back[c->compose(origin[g], origin[f])]; }));
  Functor inc{sub, c, {}, {}};
  for (const auto& name : sub->objects()) inc.objects.push_back(c->object(name));
  for (const auto& a : sub->arrows()) inc.morphisms.push_back(c->morphism(a.name));
  return {sub, inc};
}

// ---------------------------------------------------------------------------
// Common small categories

/// Thin category from a reflexive-transitive relation `leq[i][j]` (i ≤ j).
/// Non-identity arrows are named "a<b".
inline CatPtr poset_category(const std::vector<std::string>& names, const std::vector<std::vector<bool>>& leq) {
  const auto n = static_cast<ObjId>(names.size());
  CategoryBuilder b;
  for (const auto& s : names) b.add_object(s);
  std::vector<MorId> arrow(std::size_t{n} * n, kNoId);
  for (ObjId i = 0; i < n; ++i)
    for (ObjId j = 0; j < n; ++j) {
      if (!leq[i][j]) continue;
      if (i == j) {
        arrow[i * n + j] = b.add_identity(i);
      } else {
        arrow[i * n + j] = b.add_morphism(names[i] + "<" + names[j], i, j);
      }
    }
  std::vector<std::pair<ObjId, ObjId>> ends(b.num_morphisms());
  for (MorId m = 0; m < b.num_morphisms(); ++m) ends[m] = {b.arrow(m).dom, b.arrow(m).cod};
  return make_cat(std::move(b).build([&](MorId g, MorId f) -> MorId {
    return arrow[ends[f].first * n + ends[g].second];
  }));
}

/// One-object category from a monoid multiplication table `mul[a][b] = a·b`
/// with element 0 the unit. Composition g ∘ f is g·f.
inline CatPtr monoid_category(const std::vector<std::string>& elements, const std::vector<std::vector<std::uint32_t>>& mul,
                              const std::string& object = "*") {
  CategoryBuilder b;
  ObjId o = b.add_object(object);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    MorId m = b.add_morphism(k == 0 ? "id_" + object : elements[k], o, o);
    if (k == 0) b.set_identity(o, m);
  }
  return make_cat(std::move(b).build([&](MorId g, MorId f) -> MorId { return mul[g][f]; }));
}

}  // namespace catwb
