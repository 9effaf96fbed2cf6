#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "catwb/core/cap.hpp"
#include "catwb/core/functor.hpp"

namespace catwb::kan {

enum class Side { left, right };

/// left ⊣ right with unit Id ⇒ right∘left and counit left∘right ⇒ Id.
struct Adjunction {
  Functor left;
  Functor right;
  NaturalTransformation unit;
  NaturalTransformation counit;
};

inline ValidationReport validate_adjunction(const Adjunction& adj) {
  ValidationReport r;
  const auto& F = adj.left;
  const auto& U = adj.right;
  r.merge(validate_functor(F), "left: ");
  r.merge(validate_functor(U), "right: ");
  if (!r.ok()) return r;
  if (!same_category(F.source, U.target) || !same_category(F.target, U.source)) {
    r.add("adjunction-typing", {});
    return r;
  }
  r.merge(validate_natural(adj.unit), "unit: ");
  r.merge(validate_natural(adj.counit), "counit: ");
  if (!r.ok()) return r;
  if (!(adj.unit.source == identity_functor(F.source)) || !(adj.unit.target == compose(U, F)))
    r.add("unit-typing", {});
  if (!(adj.counit.source == compose(F, U)) || !(adj.counit.target == identity_functor(F.target)))
    r.add("counit-typing", {});
  if (!r.ok()) return r;
  const auto& A = *F.source;
  const auto& B = *F.target;
  // ε F • F η = id_F
  for (ObjId a = 0; a < A.num_objects(); ++a)
    if (B.compose(adj.counit.at(F.obj(a)), F.mor(adj.unit.at(a))) != B.identity(F.obj(a)))
      r.add("triangle-left", {A.object_name(a)});
  // U ε • η U = id_U
  for (ObjId b = 0; b < B.num_objects(); ++b)
    if (A.compose(U.mor(adj.counit.at(b)), adj.unit.at(U.obj(b))) != A.identity(U.obj(b)))
      r.add("triangle-right", {B.object_name(b)});
  return r;
}

namespace detail {

/// Sorted distinct objects x with a morphism x → y (incoming = true) or
/// y → x.
inline std::vector<ObjId> neighbours(const FiniteCategory& c, ObjId y, bool incoming) {
  std::vector<ObjId> out;
  for (MorId m : incoming ? c.in(y) : c.out(y)) {
    ObjId x = incoming ? c.dom(m) : c.cod(m);
    if (out.empty() || out.back() != x) out.push_back(x);
  }
  return out;
}

/// For each object b of the target, the first (a0, k0) in canonical order such
/// that a ↦ (g ↦ k0 ∘ F g) is a bijection hom(a, a0) ≅ hom(F a, b) for all a
/// (right), or g ↦ F g ∘ k0 a bijection hom(a0, a) ≅ hom(b, F a) (left).
/// Only objects a with one of the two hom-sets non-empty need checking, so
/// the candidate set and the checked set are both read off the hom structure.
inline bool universal_arrows(const Functor& f, Side side, std::vector<ObjId>& obj, std::vector<MorId>& arrow,
                             EnumerationCap cap, ObjId* failed = nullptr) {
  const auto& A = *f.source;
  const auto& B = *f.target;
  const bool right = side == Side::right;
  const auto nb = static_cast<ObjId>(B.num_objects());
  CapCounter counter(cap, "find_adjoint");

  std::vector<std::vector<ObjId>> preimage(B.num_objects());
  for (ObjId a = 0; a < A.num_objects(); ++a) preimage[f.obj(a)].push_back(a);

  obj.assign(nb, kNoId);
  arrow.assign(nb, kNoId);
  std::vector<MorId> images;
  for (ObjId b = 0; b < nb; ++b) {
    // S_b = {a : hom(F a, b) ≠ ∅} (right) or {a : hom(b, F a) ≠ ∅} (left)
    std::vector<ObjId> reach;
    for (ObjId d : neighbours(B, b, right))
      for (ObjId a : preimage[d]) reach.push_back(a);
    std::sort(reach.begin(), reach.end());
    for (ObjId a0 : reach) {
      if (neighbours(A, a0, right) != reach) continue;
      auto ks = right ? B.hom(f.obj(a0), b) : B.hom(b, f.obj(a0));
      for (MorId k0 : ks) {
        bool universal = true;
        for (ObjId a : reach) {
          auto src = right ? A.hom(a, a0) : A.hom(a0, a);
          auto dst = right ? B.hom(f.obj(a), b) : B.hom(b, f.obj(a));
          counter.tick(src.size() + 1);
          if (src.size() != dst.size()) {
            universal = false;
            break;
          }
          images.clear();
          for (MorId g : src) images.push_back(right ? B.compose(k0, f.mor(g)) : B.compose(f.mor(g), k0));
          std::sort(images.begin(), images.end());
          if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
            universal = false;
            break;
          }
        }
        if (universal) {
          obj[b] = a0;
          arrow[b] = k0;
          break;
        }
      }
      if (obj[b] != kNoId) break;
    }
    if (obj[b] == kNoId) {
      if (failed) *failed = b;
      return false;
    }
  }
  return true;
}

inline std::optional<Adjunction> right_adjoint(const Functor& f, EnumerationCap cap, ObjId* failed = nullptr) {
  const auto& A = *f.source;
  const auto& B = *f.target;
  std::vector<ObjId> u_obj;
  std::vector<MorId> eps;
  if (!universal_arrows(f, Side::right, u_obj, eps, cap, failed)) return std::nullopt;

  // The unique g : a → U b with ε_b ∘ F g = k.
  auto transpose = [&](ObjId a, ObjId b, MorId k) {
    for (MorId g : A.hom(a, u_obj[b]))
      if (B.compose(eps[b], f.mor(g)) == k) return g;
    throw InternalInconsistency("find_adjoint: universal arrow does not factor");
  };

  Functor u{f.target, f.source, u_obj, std::vector<MorId>(B.num_morphisms())};
  for (MorId h = 0; h < B.num_morphisms(); ++h)
    u.morphisms[h] = transpose(u_obj[B.dom(h)], B.cod(h), B.compose(h, eps[B.dom(h)]));
  NaturalTransformation unit{identity_functor(f.source), compose(u, f), std::vector<MorId>(A.num_objects())};
  for (ObjId a = 0; a < A.num_objects(); ++a) unit.components[a] = transpose(a, f.obj(a), B.identity(f.obj(a)));
  NaturalTransformation counit{compose(f, u), identity_functor(f.target), eps};
  return Adjunction{f, std::move(u), std::move(unit), std::move(counit)};
}

inline std::optional<Adjunction> left_adjoint(const Functor& f, EnumerationCap cap, ObjId* failed = nullptr) {
  const auto& A = *f.source;
  const auto& B = *f.target;
  std::vector<ObjId> l_obj;
  std::vector<MorId> eta;
  if (!universal_arrows(f, Side::left, l_obj, eta, cap, failed)) return std::nullopt;

  // The unique g : L b → a with F g ∘ η_b = k.
  auto transpose = [&](ObjId b, ObjId a, MorId k) {
    for (MorId g : A.hom(l_obj[b], a))
      if (B.compose(f.mor(g), eta[b]) == k) return g;
    throw InternalInconsistency("find_adjoint: universal arrow does not factor");
  };

  Functor l{f.target, f.source, l_obj, std::vector<MorId>(B.num_morphisms())};
  for (MorId h = 0; h < B.num_morphisms(); ++h)
    l.morphisms[h] = transpose(B.dom(h), l_obj[B.cod(h)], B.compose(eta[B.cod(h)], h));
  NaturalTransformation unit{identity_functor(f.target), compose(f, l), eta};
  NaturalTransformation counit{compose(l, f), identity_functor(f.source), std::vector<MorId>(A.num_objects())};
  for (ObjId a = 0; a < A.num_objects(); ++a) counit.components[a] = transpose(f.obj(a), a, B.identity(f.obj(a)));
  return Adjunction{std::move(l), f, std::move(unit), std::move(counit)};
}

}  // namespace detail

/// Outcome of an adjoint search: the adjunction, or the first object of the
/// codomain with no universal arrow.
struct AdjointSearch {
  std::optional<Adjunction> adjunction;
  ObjId obstruction = kNoId;
};

/// side = right looks for U with F ⊣ U; side = left looks for L with L ⊣ F.
/// Universal arrows are chosen in canonical object order. Every returned
/// adjunction has passed validate_adjunction.
inline AdjointSearch search_adjoint(const Functor& f, Side side, EnumerationCap cap = {}) {
  AdjointSearch out;
  out.adjunction = side == Side::right ? detail::right_adjoint(f, cap, &out.obstruction)
                                       : detail::left_adjoint(f, cap, &out.obstruction);
  if (out.adjunction) {
    auto report = validate_adjunction(*out.adjunction);
    if (!report.ok()) throw InternalInconsistency("find_adjoint: witness failed validation: " + report.summary());
  }
  return out;
}

inline std::optional<Adjunction> find_adjoint(const Functor& f, Side side, EnumerationCap cap = {}) {
  return search_adjoint(f, side, cap).adjunction;
}

/// hom(F a, b) → hom(a, U b): k ↦ U k ∘ η_a.
inline MorId transpose_right(const Adjunction& adj, ObjId a, MorId k) {
  const auto& A = *adj.left.source;
  return A.compose(adj.right.mor(k), adj.unit.at(a));
}

/// hom(a, U b) → hom(F a, b): g ↦ ε_b ∘ F g.
inline MorId transpose_left(const Adjunction& adj, ObjId b, MorId g) {
  const auto& B = *adj.left.target;
  return B.compose(adj.counit.at(b), adj.left.mor(g));
}

}  // namespace catwb::kan
