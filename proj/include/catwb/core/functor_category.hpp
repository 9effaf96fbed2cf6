#pragma once

#include <map>
#include <string>
#include <vector>

#include "catwb/core/enumerate.hpp"
#include "catwb/core/keyed_builder.hpp"

namespace catwb {

/// C^X: objects are all functors X → C, morphisms all natural transformations,
/// composed componentwise.
struct FunctorCategory {
  CatPtr category;
  CatPtr domain;
  CatPtr codomain;
  std::vector<Functor> functors;                       // indexed by ObjId of `category`
  std::vector<NaturalTransformation> transformations;  // indexed by MorId of `category`
  std::map<std::vector<std::uint32_t>, ObjId> index;

  ObjId object_of(const Functor& f) const {
    std::vector<std::uint32_t> k(f.objects.begin(), f.objects.end());
    k.insert(k.end(), f.morphisms.begin(), f.morphisms.end());
    auto it = index.find(k);
    if (it == index.end()) throw PreconditionError("object_of: functor is not an object of this functor category");
    return it->second;
  }

  MorId morphism_of(const NaturalTransformation& a) const {
    const auto& c = *category;
    ObjId d = object_of(a.source), t = object_of(a.target);
    for (MorId m : c.hom(d, t))
      if (transformations[m].components == a.components) return m;
    throw PreconditionError("morphism_of: transformation not found");
  }
};

namespace detail {

inline std::string functor_label(const Functor& f) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  std::string out = "<";
  for (std::size_t x = 0; x < f.objects.size(); ++x) {
    if (x) out += ",";
    out += t.object_name(f.objects[x]);
  }
  if (!s.is_discrete()) {
    out += "|";
    bool first = true;
    for (MorId m = 0; m < s.num_morphisms(); ++m) {
      if (s.is_identity(m)) continue;
      if (!first) out += ",";
      first = false;
      out += t.morphism_name(f.morphisms[m]);
    }
  }
  return out + ">";
}

}  // namespace detail

inline FunctorCategory functor_category(const CatPtr& x, const CatPtr& c, EnumerationCap cap = {}) {
  FunctorCategory fc;
  fc.domain = x;
  fc.codomain = c;
  auto functors = enumerate_functors(x, c, cap);
  CapCounter total(cap, "functor_category");

  KeyedCategoryBuilder b;
  std::vector<std::string> labels;
  for (const auto& f : functors) {
    labels.push_back(detail::functor_label(f));
    b.add_object(labels.back());
  }
  const bool long_names = !x->is_discrete();
  auto transformation_name = [&](const NaturalTransformation& a) {
    std::string name = "[";
    for (std::size_t k = 0; k < a.components.size(); ++k) {
      if (k) name += ",";
      name += c->morphism_name(a.components[k]);
    }
    return name + "]";
  };
  std::vector<NaturalTransformation> trans;
  for (ObjId i = 0; i < functors.size(); ++i)
    for (ObjId j = 0; j < functors.size(); ++j)
      for (auto& a : enumerate_nat_trans(functors[i], functors[j], cap)) {
        total.tick();
        const bool is_id = i == j && a == identity_transformation(functors[i]);
        std::vector<std::uint32_t> key(a.components.begin(), a.components.end());
        if (is_id) {
          b.add_identity(i, key);
        } else {
          std::string name = transformation_name(a);
          if (long_names) name += ":" + labels[i] + "=>" + labels[j];
          b.add_morphism(name, i, j, key);
        }
        trans.push_back(std::move(a));
      }

  fc.category = make_cat(std::move(b).build([&](const auto& kg, const auto& kf) {
    std::vector<std::uint32_t> k(kf.size());
    for (std::size_t i = 0; i < kf.size(); ++i) k[i] = c->compose(kg[i], kf[i]);
    return k;
  }));

  const auto& cat = *fc.category;
  fc.functors.resize(cat.num_objects());
  for (std::size_t i = 0; i < functors.size(); ++i) {
    ObjId o = cat.object(labels[i]);
    std::vector<std::uint32_t> k(functors[i].objects.begin(), functors[i].objects.end());
    k.insert(k.end(), functors[i].morphisms.begin(), functors[i].morphisms.end());
    fc.index.emplace(std::move(k), o);
    fc.functors[o] = std::move(functors[i]);
  }
  fc.transformations.resize(cat.num_morphisms());
  for (auto& a : trans) {
    ObjId d = fc.object_of(a.source), t = fc.object_of(a.target);
    if (d == t && a == identity_transformation(a.source)) {
      fc.transformations[cat.identity(d)] = std::move(a);
      continue;
    }
    std::string name = transformation_name(a);
    if (long_names) name += ":" + cat.object_name(d) + "=>" + cat.object_name(t);
    fc.transformations[cat.morphism(name)] = std::move(a);
  }
  return fc;
}

}  // namespace catwb
