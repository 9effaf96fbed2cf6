#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "catwb/core/cap.hpp"
#include "catwb/core/constructions.hpp"
#include "catwb/core/enumerate.hpp"

namespace catwb::kan {

/// A cone over D: J → C (legs apex → D j) or, for colimits, a cocone
/// (legs D j → apex).
struct Cone {
  ObjId apex = kNoId;
  std::vector<MorId> legs;  // indexed by objects of J

  friend bool operator==(const Cone&, const Cone&) = default;
};

enum class Variance { limit, colimit };

namespace detail {

/// All (co)cones over d with the given apex, in the enumeration order of
/// enumerate_nat_trans.
inline std::vector<Cone> cones_at(const Functor& d, ObjId apex, Variance v, EnumerationCap cap) {
  auto k = constant_functor(d.source, d.target, apex);
  auto ts = v == Variance::limit ? enumerate_nat_trans(k, d, cap) : enumerate_nat_trans(d, k, cap);
  std::vector<Cone> out;
  out.reserve(ts.size());
  for (auto& t : ts) out.push_back(Cone{apex, std::move(t.components)});
  return out;
}

/// λ ∘ g (limit) or g ∘ λ (colimit).
inline Cone restrict_cone(const FiniteCategory& c, const Cone& cone, MorId g, Variance v) {
  Cone r{v == Variance::limit ? c.dom(g) : c.cod(g), {}};
  r.legs.reserve(cone.legs.size());
  for (MorId l : cone.legs) r.legs.push_back(v == Variance::limit ? c.compose(l, g) : c.compose(g, l));
  return r;
}

}  // namespace detail

inline std::vector<Cone> cones(const Functor& d, ObjId apex, EnumerationCap cap = {}) {
  return detail::cones_at(d, apex, Variance::limit, cap);
}

inline std::vector<Cone> cocones(const Functor& d, ObjId apex, EnumerationCap cap = {}) {
  return detail::cones_at(d, apex, Variance::colimit, cap);
}

inline bool is_cone(const Functor& d, const Cone& cone, Variance v = Variance::limit) {
  const auto& J = *d.source;
  const auto& C = *d.target;
  if (cone.legs.size() != J.num_objects() || cone.apex >= C.num_objects()) return false;
  for (ObjId j = 0; j < J.num_objects(); ++j) {
    MorId l = cone.legs[j];
    if (l >= C.num_morphisms()) return false;
    ObjId from = v == Variance::limit ? cone.apex : d.obj(j);
    ObjId to = v == Variance::limit ? d.obj(j) : cone.apex;
    if (C.dom(l) != from || C.cod(l) != to) return false;
  }
  for (MorId u = 0; u < J.num_morphisms(); ++u) {
    if (v == Variance::limit) {
      if (C.compose(d.mor(u), cone.legs[J.dom(u)]) != cone.legs[J.cod(u)]) return false;
    } else {
      if (C.compose(cone.legs[J.cod(u)], d.mor(u)) != cone.legs[J.dom(u)]) return false;
    }
  }
  return true;
}

/// The unique g with λ∘g = μ (limit) or g∘λ = μ (colimit), if there is exactly
/// one.
inline std::optional<MorId> factor_through(const Functor& d, const Cone& universal, const Cone& other,
                                           Variance v = Variance::limit) {
  const auto& C = *d.target;
  auto candidates = v == Variance::limit ? C.hom(other.apex, universal.apex) : C.hom(universal.apex, other.apex);
  std::optional<MorId> found;
  for (MorId g : candidates) {
    if (detail::restrict_cone(C, universal, g, v).legs != other.legs) continue;
    if (found) return std::nullopt;
    found = g;
  }
  return found;
}

/// Terminality of a cone among all cones over d: for every object c', the map
/// hom(c', apex) → cones(c') is a bijection.
inline bool is_universal_cone(const Functor& d, const Cone& cone, Variance v = Variance::limit,
                              EnumerationCap cap = {}) {
  if (!is_cone(d, cone, v)) return false;
  const auto& C = *d.target;
  for (ObjId c = 0; c < C.num_objects(); ++c) {
    auto hom = v == Variance::limit ? C.hom(c, cone.apex) : C.hom(cone.apex, c);
    auto all = detail::cones_at(d, c, v, cap);
    if (all.size() != hom.size()) return false;
    std::vector<std::vector<MorId>> images;
    for (MorId g : hom) images.push_back(detail::restrict_cone(C, cone, g, v).legs);
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
  }
  return true;
}

/// Terminal-cone search. Candidate cones are tried in canonical order of
/// apex and then in enumeration order, so the result is deterministic.
inline std::optional<Cone> universal_cone(const Functor& d, Variance v, EnumerationCap cap = {}) {
  const auto& C = *d.target;
  const auto n = static_cast<ObjId>(C.num_objects());
  std::vector<std::vector<Cone>> all(n);
  for (ObjId c = 0; c < n; ++c) all[c] = detail::cones_at(d, c, v, cap);
  CapCounter counter(cap, v == Variance::limit ? "limit_of_diagram" : "colimit_of_diagram");

  for (ObjId c = 0; c < n; ++c) {
    for (const auto& cone : all[c]) {
      bool ok = true;
      for (ObjId other = 0; other < n && ok; ++other) {
        auto hom = v == Variance::limit ? C.hom(other, c) : C.hom(c, other);
        counter.tick(hom.size() + 1);
        if (hom.size() != all[other].size()) {
          ok = false;
          break;
        }
        std::vector<std::vector<MorId>> images;
        images.reserve(hom.size());
        for (MorId g : hom) images.push_back(detail::restrict_cone(C, cone, g, v).legs);
        std::sort(images.begin(), images.end());
        ok = std::adjacent_find(images.begin(), images.end()) == images.end();
      }
      if (ok) return cone;
    }
  }
  return std::nullopt;
}

inline std::optional<Cone> limit_of_diagram(const Functor& d, EnumerationCap cap = {}) {
  return universal_cone(d, Variance::limit, cap);
}

inline std::optional<Cone> colimit_of_diagram(const Functor& d, EnumerationCap cap = {}) {
  return universal_cone(d, Variance::colimit, cap);
}

/// Terminal (initial) object, as the limit (colimit) of the empty diagram.
inline std::optional<ObjId> terminal_object(const CatPtr& c, EnumerationCap cap = {}) {
  auto l = limit_of_diagram(Functor{initial_category(), c, {}, {}}, cap);
  return l ? std::optional<ObjId>(l->apex) : std::nullopt;
}

inline std::optional<ObjId> initial_object(const CatPtr& c, EnumerationCap cap = {}) {
  auto l = colimit_of_diagram(Functor{initial_category(), c, {}, {}}, cap);
  return l ? std::optional<ObjId>(l->apex) : std::nullopt;
}

}  // namespace catwb::kan
