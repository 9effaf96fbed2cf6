#pragma once

#include <optional>

#include "catwb/kan/kan_extension.hpp"

namespace catwb::kan {

enum class DensityKind { monad, comonad };

/// Codensity monad Ran_τ τ (kind = monad) or density comonad Lan_τ τ
/// (kind = comonad). `unit` is η : Id ⇒ T or the counit D ⇒ Id;
/// `multiplication` is μ : TT ⇒ T or δ : D ⇒ DD.
struct DensityMonadResult {
  DensityKind kind = DensityKind::monad;
  Functor endofunctor;
  NaturalTransformation unit;
  NaturalTransformation multiplication;
  ValidationReport laws;
  KanExtensionResult extension;
};

inline ValidationReport check_monad_laws(const Functor& t, const NaturalTransformation& eta,
                                         const NaturalTransformation& mu) {
  ValidationReport r;
  const auto& C = *t.source;
  for (ObjId c = 0; c < C.num_objects(); ++c) {
    const MorId id = C.identity(t.obj(c));
    if (C.compose(mu.at(c), t.mor(eta.at(c))) != id) r.add("left-unit", {C.object_name(c)});
    if (C.compose(mu.at(c), eta.at(t.obj(c))) != id) r.add("right-unit", {C.object_name(c)});
    if (C.compose(mu.at(c), t.mor(mu.at(c))) != C.compose(mu.at(c), mu.at(t.obj(c))))
      r.add("associativity", {C.object_name(c)});
  }
  return r;
}

inline ValidationReport check_comonad_laws(const Functor& d, const NaturalTransformation& eps,
                                           const NaturalTransformation& delta) {
  ValidationReport r;
  const auto& C = *d.source;
  for (ObjId c = 0; c < C.num_objects(); ++c) {
    const MorId id = C.identity(d.obj(c));
    if (C.compose(d.mor(eps.at(c)), delta.at(c)) != id) r.add("left-counit", {C.object_name(c)});
    if (C.compose(eps.at(d.obj(c)), delta.at(c)) != id) r.add("right-counit", {C.object_name(c)});
    if (C.compose(d.mor(delta.at(c)), delta.at(c)) != C.compose(delta.at(d.obj(c)), delta.at(c)))
      r.add("coassociativity", {C.object_name(c)});
  }
  return r;
}

inline std::optional<DensityMonadResult> density_monad(const Functor& tau, DensityKind kind,
                                                       EnumerationCap cap = {}) {
  const bool monad = kind == DensityKind::monad;
  auto ext = kan_extension(tau, tau, monad ? Side::right : Side::left, cap);
  if (!ext) return std::nullopt;
  DensityMonadResult r;
  r.kind = kind;
  r.endofunctor = ext->extension;
  const auto& T = r.endofunctor;
  auto id_c = identity_functor(tau.target);
  auto id_tau = identity_transformation(tau);
  auto tt = compose(T, T);
  const auto& u = ext->universal;
  if (monad) {
    r.unit = kan_factor(*ext, id_c, NaturalTransformation{compose(id_c, tau), tau, id_tau.components});
    // ε • T ε : T T τ ⇒ τ
    r.multiplication = kan_factor(*ext, tt, vertical(u, whisker_right(T, u)));
    r.laws = check_monad_laws(T, r.unit, r.multiplication);
  } else {
    r.unit = kan_factor(*ext, id_c, NaturalTransformation{tau, compose(id_c, tau), id_tau.components});
    // D η • η : τ ⇒ D D τ
    r.multiplication = kan_factor(*ext, tt, vertical(whisker_right(T, u), u));
    r.laws = check_comonad_laws(T, r.unit, r.multiplication);
  }
  r.laws.merge(validate_natural(r.unit), "unit: ");
  r.laws.merge(validate_natural(r.multiplication), "multiplication: ");
  r.extension = std::move(*ext);
  return r;
}

}  // namespace catwb::kan
