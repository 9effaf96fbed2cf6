#pragma once

#include <string>
#include <vector>

#include "catwb/core/constructions.hpp"
#include "catwb/core/keyed_builder.hpp"

namespace catwb::kan {

struct CommaObject {
  ObjId left;   // object of the source of F
  ObjId right;  // object of the source of G
  MorId arrow;  // F left → G right
};

/// (F ↓ G) with its projections and the canonical 2-cell F∘π1 ⇒ G∘π2.
struct CommaCategory {
  CatPtr category;
  Functor f;
  Functor g;
  Functor proj_left;
  Functor proj_right;
  NaturalTransformation filler;
  std::vector<CommaObject> data;  // indexed by ObjId of `category`

  ObjId find(ObjId left, ObjId right, MorId arrow) const {
    for (ObjId x = 0; x < data.size(); ++x)
      if (data[x].left == left && data[x].right == right && data[x].arrow == arrow) return x;
    throw PreconditionError("comma object not found");
  }
};

inline CommaCategory comma_category(const Functor& f, const Functor& g) {
  if (!same_category(f.target, g.target)) throw PreconditionError("comma_category: functors have different targets");
  const auto& A = *f.source;
  const auto& B = *g.source;
  const auto& C = *f.target;

  KeyedCategoryBuilder kb;
  std::vector<CommaObject> objs;
  std::vector<std::string> names;
  for (ObjId a = 0; a < A.num_objects(); ++a)
    for (ObjId b = 0; b < B.num_objects(); ++b)
      for (MorId k : C.hom(f.obj(a), g.obj(b))) {
        objs.push_back({a, b, k});
        names.push_back("(" + A.object_name(a) + "," + B.object_name(b) + "," + C.morphism_name(k) + ")");
        kb.add_object(names.back());
      }
  struct Added {
    std::string name;
    MorId u, v;
  };
  std::vector<Added> added;
  for (ObjId s = 0; s < objs.size(); ++s)
    for (ObjId t = 0; t < objs.size(); ++t) {
      const auto& o = objs[s];
      const auto& p = objs[t];
      for (MorId u : A.hom(o.left, p.left))
        for (MorId v : B.hom(o.right, p.right)) {
          if (C.compose(g.mor(v), o.arrow) != C.compose(p.arrow, f.mor(u))) continue;
          if (s == t && A.is_identity(u) && B.is_identity(v)) {
            kb.add_identity(s, {u, v});
            added.push_back({"id_" + names[s], u, v});
          } else {
            added.push_back({"[" + A.morphism_name(u) + "," + B.morphism_name(v) + "]:" + names[s] + ">" + names[t], u, v});
            kb.add_morphism(added.back().name, s, t, {u, v});
          }
        }
    }

  CommaCategory cc;
  cc.f = f;
  cc.g = g;
  cc.category = make_cat(std::move(kb).build([&](const auto& kg, const auto& kf) {
    return std::vector<std::uint32_t>{A.compose(kg[0], kf[0]), B.compose(kg[1], kf[1])};
  }));
  const auto& K = *cc.category;
  cc.data.resize(K.num_objects());
  for (ObjId s = 0; s < objs.size(); ++s) cc.data[K.object(names[s])] = objs[s];

  cc.proj_left = Functor{cc.category, f.source, {}, std::vector<MorId>(K.num_morphisms())};
  cc.proj_right = Functor{cc.category, g.source, {}, std::vector<MorId>(K.num_morphisms())};
  for (const auto& o : cc.data) {
    cc.proj_left.objects.push_back(o.left);
    cc.proj_right.objects.push_back(o.right);
  }
  for (const auto& m : added) {
    MorId k = K.morphism(m.name);
    cc.proj_left.morphisms[k] = m.u;
    cc.proj_right.morphisms[k] = m.v;
  }
  cc.filler = NaturalTransformation{compose(f, cc.proj_left), compose(g, cc.proj_right), {}};
  for (const auto& o : cc.data) cc.filler.components.push_back(o.arrow);
  return cc;
}

}  // namespace catwb::kan
