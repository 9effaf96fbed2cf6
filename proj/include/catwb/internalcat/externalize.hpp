#pragma once

#include <map>
#include <tuple>
#include <string>
#include <vector>

#include "catwb/connectives/indexed.hpp"
#include "catwb/internalcat/internal_category.hpp"

namespace catwb::internalcat {

/// Finite sets restricted to the subsets of {0, …, carrier-1}, with every
/// function between them.
struct Universe {
  std::size_t carrier = 0;
  CatPtr base;
  std::vector<std::vector<std::size_t>> sets;  // per base object, sorted elements
  std::vector<std::vector<std::size_t>> maps;  // per base morphism, image positions

  ObjId object_of(const std::vector<std::size_t>& subset) const {
    for (ObjId x = 0; x < sets.size(); ++x)
      if (sets[x] == subset) return x;
    throw PreconditionError("universe does not contain the requested index set");
  }
  std::size_t size_of(ObjId x) const { return sets.at(x).size(); }
};

inline constexpr std::size_t kMaxCarrier = 4;

inline std::string set_name(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + "}";
}

inline Universe finset_universe(std::size_t carrier) {
  if (carrier > kMaxCarrier)
    throw PreconditionError("universe carrier " + std::to_string(carrier) + " exceeds " + std::to_string(kMaxCarrier));
  std::vector<std::vector<std::size_t>> subsets;
  for (std::uint32_t mask = 0; mask < (1u << carrier); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < carrier; ++i)
      if (mask >> i & 1) s.push_back(i);
    subsets.push_back(std::move(s));
  }
  struct Map {
    std::size_t dom, cod;
    std::vector<std::size_t> image;
  };
  std::vector<Map> maps;
  std::map<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>, MorId> index;
  CategoryBuilder b;
  for (const auto& s : subsets) b.add_object(set_name(s));
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = 0; j < subsets.size(); ++j) {
      const auto n = subsets[i].size(), k = subsets[j].size();
      if (n > 0 && k == 0) continue;
      std::vector<std::size_t> img(n, 0);
      while (true) {
        bool ident = i == j;
        for (std::size_t t = 0; t < n && ident; ++t) ident = img[t] == t;
        std::string name;
        if (ident) {
          name = "id_" + set_name(subsets[i]);
        } else {
          name = set_name(subsets[i]) + ">" + set_name(subsets[j]) + ":";
          for (auto v : img) name += std::to_string(subsets[j][v]);
        }
        auto m = b.add_morphism(name, static_cast<ObjId>(i), static_cast<ObjId>(j));
        if (ident) b.set_identity(static_cast<ObjId>(i), m);
        index[{i, j, img}] = m;
        maps.push_back({i, j, img});
        std::size_t t = 0;
        while (t < n && ++img[t] == k) img[t++] = 0;
        if (t == n) break;
      }
    }
  std::vector<std::string> names;
  for (MorId m = 0; m < maps.size(); ++m) names.push_back(b.arrow(m).name);
  Universe u;
  u.carrier = carrier;
  u.base = make_cat(std::move(b).build([&](MorId g, MorId f) -> MorId {
    const auto& mf = maps[f];
    const auto& mg = maps[g];
    std::vector<std::size_t> h(mf.image.size());
    for (std::size_t t = 0; t < h.size(); ++t) h[t] = mg.image[mf.image[t]];
    return index.at({mf.dom, mg.cod, h});
  }));
  u.sets.resize(subsets.size());
  for (const auto& s : subsets) u.sets[u.base->object(set_name(s))] = s;
  u.maps.resize(maps.size());
  for (MorId m = 0; m < maps.size(); ++m) u.maps[u.base->morphism(names[m])] = maps[m].image;
  return u;
}

/// The fiber of fam(A) over a k-element set: tuples of A0 as objects, tuples
/// of A1 as morphisms, composition componentwise.
struct FamilyFiber {
  std::size_t arity = 0;
  CatPtr category;
  std::vector<ObjId> object_of_code;  // mixed-radix code of a tuple → object id
  std::vector<MorId> morphism_of_code;
  std::vector<std::vector<std::size_t>> object_tuple;  // by object id
  std::vector<std::vector<std::size_t>> morphism_tuple;

  ObjId object(const std::vector<std::size_t>& t, std::size_t radix) const {
    return object_of_code[encode(t, radix)];
  }
  MorId morphism(const std::vector<std::size_t>& t, std::size_t radix) const {
    return morphism_of_code[encode(t, radix)];
  }
  static std::size_t encode(const std::vector<std::size_t>& t, std::size_t radix) {
    std::size_t c = 0;
    for (auto it = t.rbegin(); it != t.rend(); ++it) c = c * radix + *it;
    return c;
  }
};

inline std::vector<std::vector<std::size_t>> all_tuples(std::size_t k, std::size_t radix) {
  std::vector<std::vector<std::size_t>> out;
  if (radix == 0 && k > 0) return out;
  std::vector<std::size_t> t(k, 0);
  while (true) {
    out.push_back(t);
    std::size_t i = 0;
    while (i < k && ++t[i] == radix) t[i++] = 0;
    if (i == k) return out;
  }
}

inline std::string tuple_name(const std::vector<std::size_t>& t, const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.size(); ++k) out += (k ? "," : "") + names[t[k]];
  return out + ")";
}

inline FamilyFiber family_fiber(const InternalCategory& a, std::size_t k) {
  const auto n0 = a.objects.size(), n1 = a.arrows.size();
  auto objs = all_tuples(k, n0);
  auto mors = all_tuples(k, n1);
  CategoryBuilder b;
  std::vector<std::string> onames, mnames;
  for (const auto& t : objs) {
    onames.push_back(tuple_name(t, a.objects));
    b.add_object(onames.back());
  }
  for (std::size_t c = 0; c < mors.size(); ++c) {
    const auto& t = mors[c];
    std::vector<std::size_t> d(k), e(k);
    bool ident = true;
    for (std::size_t i = 0; i < k; ++i) {
      d[i] = a.dom[t[i]];
      e[i] = a.cod[t[i]];
      ident = ident && a.e[d[i]] == t[i];
    }
    auto dom = static_cast<ObjId>(FamilyFiber::encode(d, n0));
    mnames.push_back(ident ? "id_" + onames[dom] : tuple_name(t, a.arrows));
    auto m = b.add_morphism(mnames.back(), dom, static_cast<ObjId>(FamilyFiber::encode(e, n0)));
    if (ident) b.set_identity(dom, m);
  }
  FamilyFiber fib;
  fib.arity = k;
  fib.category = make_cat(std::move(b).build([&](MorId g, MorId f) -> MorId {
    std::vector<std::size_t> h(k);
    for (std::size_t i = 0; i < k; ++i) {
      h[i] = a.m[mors[g][i]][mors[f][i]];
      if (h[i] == InternalCategory::kNone) return kNoId;
    }
    return static_cast<MorId>(FamilyFiber::encode(h, n1));
  }));
  const auto& C = *fib.category;
  fib.object_of_code.resize(objs.size());
  fib.object_tuple.resize(objs.size());
  for (std::size_t c = 0; c < objs.size(); ++c) {
    ObjId x = C.object(onames[c]);
    fib.object_of_code[c] = x;
    fib.object_tuple[x] = objs[c];
  }
  fib.morphism_of_code.resize(mors.size());
  fib.morphism_tuple.resize(mors.size());
  for (std::size_t c = 0; c < mors.size(); ++c) {
    MorId m = C.morphism(mnames[c]);
    fib.morphism_of_code[c] = m;
    fib.morphism_tuple[m] = mors[c];
  }
  return fib;
}

/// fam(A) over a universe: fiber over X is the category of X-indexed
/// families, reindexing is precomposition. Fibers over equal-size index sets
/// share one category.
struct Externalization {
  InternalCategory internal;
  Universe universe;
  std::vector<FamilyFiber> by_arity;
  connectives::IndexedCategory phi;

  const FamilyFiber& fiber(ObjId x) const { return by_arity.at(universe.size_of(x)); }
};

inline Externalization externalize(const InternalCategory& a, const Universe& u) {
  auto report = validate_internal(a);
  if (!report.ok()) throw PreconditionError("externalize: " + report.summary());
  Externalization ext;
  ext.internal = a;
  ext.universe = u;
  for (std::size_t k = 0; k <= u.carrier; ++k) ext.by_arity.push_back(family_fiber(a, k));
  const auto& B = *u.base;
  ext.phi.base = u.base;
  ext.phi.split = true;
  for (ObjId x = 0; x < B.num_objects(); ++x) ext.phi.fibers.push_back(ext.fiber(x).category);
  const auto n0 = a.objects.size(), n1 = a.arrows.size();
  for (MorId s = 0; s < B.num_morphisms(); ++s) {
    const auto& src = ext.fiber(B.cod(s));
    const auto& dst = ext.fiber(B.dom(s));
    const auto& img = u.maps[s];
    Functor f{src.category, dst.category, {}, {}};
    std::vector<std::size_t> t(img.size());
    for (const auto& y : src.object_tuple) {
      for (std::size_t i = 0; i < img.size(); ++i) t[i] = y[img[i]];
      f.objects.push_back(dst.object(t, n0));
    }
    for (const auto& y : src.morphism_tuple) {
      for (std::size_t i = 0; i < img.size(); ++i) t[i] = y[img[i]];
      f.morphisms.push_back(dst.morphism(t, n1));
    }
    ext.phi.reindex.push_back(std::move(f));
  }
  return ext;
}

struct GenericObject {
  std::vector<std::string> omega;  // A0
  std::size_t index_sets = 0;
  std::size_t naturality_squares = 0;
};

/// Ω = A0 represents the objects functor: objects of Φ(X) are exactly the
/// functions X → Ω, and reindexing is precomposition.
inline GenericObject generic_object(const Externalization& ext) {
  const auto& B = *ext.universe.base;
  const auto n0 = ext.internal.objects.size();
  GenericObject g;
  g.omega = ext.internal.objects;
  for (ObjId x = 0; x < B.num_objects(); ++x) {
    const auto& fib = ext.fiber(x);
    const auto k = ext.universe.size_of(x);
    auto expected = all_tuples(k, n0);
    auto got = fib.object_tuple;
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    if (got != expected) throw InternalInconsistency("generic_object: objects over " + B.object_name(x) + " are not X → Ω");
    ++g.index_sets;
  }
  for (MorId s = 0; s < B.num_morphisms(); ++s) {
    const auto& src = ext.fiber(B.cod(s));
    const auto& dst = ext.fiber(B.dom(s));
    const auto& img = ext.universe.maps[s];
    for (ObjId y = 0; y < src.object_tuple.size(); ++y) {
      const auto& ty = src.object_tuple[y];
      const auto& tr = dst.object_tuple[ext.phi.reindex[s].obj(y)];
      for (std::size_t i = 0; i < img.size(); ++i)
        if (tr[i] != ty[img[i]]) throw InternalInconsistency("generic_object: naturality fails along " + B.morphism_name(s));
      ++g.naturality_squares;
    }
  }
  return g;
}

/// hom(x, y) for x, y over I: the set H of pairs (i, α : x i → y i), its
/// projection p : H → I and the tautological vertical arrow χ over H.
struct HomObjectWitness {
  std::vector<std::pair<std::size_t, std::size_t>> elements;  // (position in I, element of A1)
  std::vector<std::size_t> p;
  std::vector<std::size_t> chi;
  std::size_t probes = 0;
  bool complete = false;  // every probe factors exactly once
  std::vector<std::string> failures;
};

/// H is the object set of the inserter of x, y : disc(I) → A; the
/// certificate enumerates every J in the universe, every q : J → I and every
/// vertical β : q*x → q*y, and counts h : J → H with p h = q and h*χ = β.
inline HomObjectWitness hom_object(const Externalization& ext, ObjId index, ObjId x, ObjId y, EnumerationCap cap = {}) {
  const auto& a = ext.internal;
  const auto& B = *ext.universe.base;
  const auto& fib = ext.fiber(index);
  const auto& tx = fib.object_tuple.at(x);
  const auto& ty = fib.object_tuple.at(y);
  const auto k = tx.size();

  auto ac = internal_to_category(a);
  std::vector<std::string> positions;
  for (std::size_t i = 0; i < k; ++i) positions.push_back("i" + std::to_string(i));
  auto di = discrete_category(positions);
  Functor fx{di, ac, {}, {}}, fy{di, ac, {}, {}};
  for (ObjId o = 0; o < di->num_objects(); ++o) {
    auto i = std::stoul(di->object_name(o).substr(1));
    fx.objects.push_back(ac->object(a.objects[tx[i]]));
    fy.objects.push_back(ac->object(a.objects[ty[i]]));
    fx.morphisms.push_back(ac->identity(fx.objects.back()));
    fy.morphisms.push_back(ac->identity(fy.objects.back()));
  }
  auto ins = kan::inserter(fx, fy);
  HomObjectWitness w;
  for (const auto& [o, alpha] : ins.pairs) {
    auto i = std::stoul(di->object_name(o).substr(1));
    std::size_t arrow = std::find(a.arrows.begin(), a.arrows.end(), ac->morphism_name(alpha)) - a.arrows.begin();
    w.elements.emplace_back(i, arrow);
  }
  std::sort(w.elements.begin(), w.elements.end());
  for (auto [i, arrow] : w.elements) {
    w.p.push_back(i);
    w.chi.push_back(arrow);
  }

  CapCounter counter(cap, "hom_object");
  const auto nh = w.elements.size();
  for (ObjId j = 0; j < B.num_objects(); ++j) {
    const auto nj = ext.universe.size_of(j);
    for (MorId q : B.hom(j, index)) {
      const auto& qi = ext.universe.maps[q];
      // β : q*x → q*y, one arrow per element of J
      std::vector<std::vector<std::size_t>> choices(nj);
      for (std::size_t t = 0; t < nj; ++t)
        for (std::size_t f = 0; f < a.arrows.size(); ++f)
          if (a.dom[f] == tx[qi[t]] && a.cod[f] == ty[qi[t]]) choices[t].push_back(f);
      std::vector<std::size_t> pick(nj, 0);
      bool empty = false;
      for (const auto& c : choices) empty = empty || c.empty();
      if (empty) continue;  // no β over this q
      while (true) {
        ++w.probes;
        // h : J → H is a tuple, so the factorizations are counted per element
        std::size_t count = 1;
        for (std::size_t t = 0; t < nj; ++t) {
          std::size_t here = 0;
          for (std::size_t e = 0; e < nh; ++e) {
            counter.tick();
            if (w.p[e] == qi[t] && w.chi[e] == choices[t][pick[t]]) ++here;
          }
          count *= here;
        }
        if (count != 1)
          w.failures.push_back(B.morphism_name(q) + ": " + std::to_string(count) + " factorizations");
        std::size_t t = 0;
        while (t < nj && ++pick[t] == choices[t].size()) pick[t++] = 0;
        if (t == nj) break;
      }
    }
  }
  w.complete = w.failures.empty();
  return w;
}

}  // namespace catwb::internalcat
