#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catwb/core/category.hpp"

namespace catwb {

using CatPtr = std::shared_ptr<const FiniteCategory>;

inline CatPtr make_cat(FiniteCategory c) { return std::make_shared<const FiniteCategory>(std::move(c)); }

inline bool same_category(const CatPtr& a, const CatPtr& b) { return a == b || (a && b && *a == *b); }

struct Functor {
  CatPtr source;
  CatPtr target;
  std::vector<ObjId> objects;    // image of each source object
  std::vector<MorId> morphisms;  // image of each source morphism

  ObjId obj(ObjId x) const { return objects[x]; }
  MorId mor(MorId m) const { return morphisms[m]; }

  friend bool operator==(const Functor& a, const Functor& b) {
    return a.objects == b.objects && a.morphisms == b.morphisms && same_category(a.source, b.source) &&
           same_category(a.target, b.target);
  }
};

inline Functor identity_functor(const CatPtr& c) {
  Functor f{c, c, {}, {}};
  f.objects.resize(c->num_objects());
  f.morphisms.resize(c->num_morphisms());
  for (ObjId x = 0; x < c->num_objects(); ++x) f.objects[x] = x;
  for (MorId m = 0; m < c->num_morphisms(); ++m) f.morphisms[m] = m;
  return f;
}

/// G ∘ F
inline Functor compose(const Functor& g, const Functor& f) {
  if (!same_category(f.target, g.source)) throw PreconditionError("compose: functors are not composable");
  Functor h{f.source, g.target, {}, {}};
  h.objects.reserve(f.objects.size());
  h.morphisms.reserve(f.morphisms.size());
  for (ObjId y : f.objects) h.objects.push_back(g.objects[y]);
  for (MorId m : f.morphisms) h.morphisms.push_back(g.morphisms[m]);
  return h;
}

inline Functor constant_functor(const CatPtr& source, const CatPtr& target, ObjId c) {
  Functor f{source, target, std::vector<ObjId>(source->num_objects(), c),
            std::vector<MorId>(source->num_morphisms(), target->identity(c))};
  return f;
}

inline ValidationReport validate_functor(const Functor& f) {
  ValidationReport r;
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (f.objects.size() != s.num_objects() || f.morphisms.size() != s.num_morphisms()) {
    r.add("functor-arity", {});
    return r;
  }
  for (ObjId x = 0; x < s.num_objects(); ++x)
    if (f.objects[x] >= t.num_objects()) r.add("functor-object-range", {s.object_name(x)});
  for (MorId m = 0; m < s.num_morphisms(); ++m)
    if (f.morphisms[m] >= t.num_morphisms()) r.add("functor-morphism-range", {s.morphism_name(m)});
  if (!r.ok()) return r;
  for (MorId m = 0; m < s.num_morphisms(); ++m) {
    MorId fm = f.morphisms[m];
    if (t.dom(fm) != f.objects[s.dom(m)] || t.cod(fm) != f.objects[s.cod(m)])
      r.add("functor-typing", {s.morphism_name(m)});
  }
  for (ObjId x = 0; x < s.num_objects(); ++x)
    if (f.morphisms[s.identity(x)] != t.identity(f.objects[x])) r.add("functor-identity", {s.object_name(x)});
  if (!r.ok()) return r;
  for (MorId a = 0; a < s.num_morphisms(); ++a)
    for (MorId b : s.out(s.cod(a)))
      if (f.morphisms[s.compose(b, a)] != t.compose(f.morphisms[b], f.morphisms[a]))
        r.add("functor-composition", {s.morphism_name(b), s.morphism_name(a)});
  return r;
}

inline bool parallel(const Functor& f, const Functor& g) {
  return same_category(f.source, g.source) && same_category(f.target, g.target);
}

struct NaturalTransformation {
  Functor source;
  Functor target;
  std::vector<MorId> components;

  MorId at(ObjId x) const { return components[x]; }

  friend bool operator==(const NaturalTransformation& a, const NaturalTransformation& b) {
    return a.components == b.components && a.source == b.source && a.target == b.target;
  }
};

inline NaturalTransformation identity_transformation(const Functor& f) {
  NaturalTransformation a{f, f, {}};
  a.components.reserve(f.objects.size());
  for (ObjId y : f.objects) a.components.push_back(f.target->identity(y));
  return a;
}

/// β • α (vertical composite).
inline NaturalTransformation vertical(const NaturalTransformation& beta, const NaturalTransformation& alpha) {
  if (!(alpha.target == beta.source)) throw PreconditionError("vertical: transformations do not compose");
  NaturalTransformation c{alpha.source, beta.target, {}};
  const auto& t = *alpha.source.target;
  c.components.reserve(alpha.components.size());
  for (std::size_t x = 0; x < alpha.components.size(); ++x)
    c.components.push_back(t.compose(beta.components[x], alpha.components[x]));
  return c;
}

/// α H : F∘H ⇒ G∘H
inline NaturalTransformation whisker_left(const NaturalTransformation& alpha, const Functor& h) {
  NaturalTransformation c{compose(alpha.source, h), compose(alpha.target, h), {}};
  c.components.reserve(h.objects.size());
  for (ObjId y : h.objects) c.components.push_back(alpha.components[y]);
  return c;
}

/// K α : K∘F ⇒ K∘G
inline NaturalTransformation whisker_right(const Functor& k, const NaturalTransformation& alpha) {
  NaturalTransformation c{compose(k, alpha.source), compose(k, alpha.target), {}};
  c.components.reserve(alpha.components.size());
  for (MorId m : alpha.components) c.components.push_back(k.morphisms[m]);
  return c;
}

inline ValidationReport validate_natural(const NaturalTransformation& a) {
  ValidationReport r;
  const auto& s = *a.source.source;
  const auto& t = *a.source.target;
  if (!parallel(a.source, a.target)) {
    r.add("natural-parallel", {});
    return r;
  }
  if (a.components.size() != s.num_objects()) {
    r.add("natural-arity", {});
    return r;
  }
  for (ObjId x = 0; x < s.num_objects(); ++x) {
    MorId c = a.components[x];
    if (c >= t.num_morphisms() || t.dom(c) != a.source.objects[x] || t.cod(c) != a.target.objects[x])
      r.add("natural-typing", {s.object_name(x)});
  }
  if (!r.ok()) return r;
  for (MorId m = 0; m < s.num_morphisms(); ++m) {
    MorId lhs = t.compose(a.target.morphisms[m], a.components[s.dom(m)]);
    MorId rhs = t.compose(a.components[s.cod(m)], a.source.morphisms[m]);
    if (lhs != rhs) r.add("naturality", {s.morphism_name(m)});
  }
  return r;
}

inline std::optional<MorId> inverse_of(const FiniteCategory& c, MorId m) {
  for (MorId k : c.hom(c.cod(m), c.dom(m)))
    if (c.compose(k, m) == c.identity(c.dom(m)) && c.compose(m, k) == c.identity(c.cod(m))) return k;
  return std::nullopt;
}

inline bool is_iso(const FiniteCategory& c, MorId m) { return inverse_of(c, m).has_value(); }

inline bool objects_isomorphic(const FiniteCategory& c, ObjId a, ObjId b) {
  for (MorId m : c.hom(a, b))
    if (is_iso(c, m)) return true;
  return false;
}

inline bool is_natural_iso(const NaturalTransformation& a) {
  for (MorId m : a.components)
    if (!is_iso(*a.source.target, m)) return false;
  return true;
}

inline bool is_faithful(const Functor& f) {
  const auto& s = *f.source;
  for (ObjId a = 0; a < s.num_objects(); ++a)
    for (ObjId b = 0; b < s.num_objects(); ++b) {
      auto h = s.hom(a, b);
      std::vector<MorId> img;
      for (MorId m : h) img.push_back(f.morphisms[m]);
      std::sort(img.begin(), img.end());
      if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
    }
  return true;
}

/// Reflects isomorphisms: F(m) iso implies m iso.
inline bool is_conservative(const Functor& f) {
  const auto& s = *f.source;
  for (MorId m = 0; m < s.num_morphisms(); ++m)
    if (is_iso(*f.target, f.morphisms[m]) && !is_iso(s, m)) return false;
  return true;
}

}  // namespace catwb
