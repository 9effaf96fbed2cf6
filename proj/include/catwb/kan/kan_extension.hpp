#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catwb/kan/adjoint.hpp"
#include "catwb/kan/comma.hpp"
#include "catwb/kan/limits.hpp"

namespace catwb::kan {

/// Kan extension of τ : X → A along s : X → Y.
/// side = right: extension R with universal ε : R∘s ⇒ τ.
/// side = left: extension L with universal η : τ ⇒ L∘s.
struct KanExtensionResult {
  Side side = Side::right;
  Functor tau;
  Functor s;
  Functor extension;
  NaturalTransformation universal;
  bool pointwise = false;
  // Pointwise data, per object y of Y: the comma (y ↓ s) or (s ↓ y), and the
  // (co)limit cone of τ restricted to it.
  std::vector<CommaCategory> commas;
  std::vector<Cone> cones;
};

enum class CheckStatus { verified, failed, skipped_cap };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::verified: return "verified";
    case CheckStatus::failed: return "failed";
    case CheckStatus::skipped_cap: return "skipped_cap";
  }
  return "?";
}

namespace detail {

inline Variance variance_of(Side side) { return side == Side::right ? Variance::limit : Variance::colimit; }

}  // namespace detail

/// Pointwise construction: R y = lim over (y ↓ s) of τ∘π2, L y = colim over
/// (s ↓ y) of τ∘π1. Returns nullopt as soon as one (co)limit is missing.
inline std::optional<KanExtensionResult> kan_extension(const Functor& tau, const Functor& s, Side side,
                                                       EnumerationCap cap = {}) {
  if (!same_category(tau.source, s.source)) throw PreconditionError("kan_extension: τ and s have different sources");
  const auto& X = *s.source;
  const auto& Y = *s.target;
  const auto& A = *tau.target;
  const auto v = detail::variance_of(side);
  const bool right = side == Side::right;

  KanExtensionResult r;
  r.side = side;
  r.tau = tau;
  r.s = s;
  r.pointwise = true;
  for (ObjId y = 0; y < Y.num_objects(); ++y) {
    auto pick = object_picker(s.target, y);
    auto cc = right ? comma_category(pick, s) : comma_category(s, pick);
    auto d = compose(tau, right ? cc.proj_right : cc.proj_left);
    auto cone = universal_cone(d, v, cap);
    if (!cone) return std::nullopt;
    r.commas.push_back(std::move(cc));
    r.cones.push_back(std::move(*cone));
  }

  Functor ext{s.target, tau.target, {}, std::vector<MorId>(Y.num_morphisms())};
  for (const auto& c : r.cones) ext.objects.push_back(c.apex);
  for (MorId m = 0; m < Y.num_morphisms(); ++m) {
    const ObjId y = Y.dom(m), y2 = Y.cod(m);
    Cone other;
    if (right) {
      // cone over (y2 ↓ s) with apex R y: leg at (x, k) is λ^y at (x, k∘m)
      const auto& cc2 = r.commas[y2];
      other.apex = ext.objects[y];
      for (const auto& o : cc2.data)
        other.legs.push_back(r.cones[y].legs[r.commas[y].find(0, o.right, Y.compose(o.arrow, m))]);
      auto d = compose(tau, cc2.proj_right);
      auto g = factor_through(d, r.cones[y2], other, v);
      if (!g) throw InternalInconsistency("kan_extension: limit does not factor");
      ext.morphisms[m] = *g;
    } else {
      // cocone over (s ↓ y) with apex L y2: leg at (x, k) is λ^y2 at (x, m∘k)
      const auto& cc = r.commas[y];
      other.apex = ext.objects[y2];
      for (const auto& o : cc.data)
        other.legs.push_back(r.cones[y2].legs[r.commas[y2].find(o.left, 0, Y.compose(m, o.arrow))]);
      auto d = compose(tau, cc.proj_left);
      auto g = factor_through(d, r.cones[y], other, v);
      if (!g) throw InternalInconsistency("kan_extension: colimit does not factor");
      ext.morphisms[m] = *g;
    }
  }

  std::vector<MorId> comps;
  for (ObjId x = 0; x < X.num_objects(); ++x) {
    const ObjId sx = s.obj(x);
    const auto& cc = r.commas[sx];
    ObjId at = right ? cc.find(0, x, Y.identity(sx)) : cc.find(x, 0, Y.identity(sx));
    comps.push_back(r.cones[sx].legs[at]);
  }
  auto es = compose(ext, s);
  r.universal = right ? NaturalTransformation{es, tau, comps} : NaturalTransformation{tau, es, comps};
  r.extension = std::move(ext);

  auto fr = validate_functor(r.extension);
  auto nr = validate_natural(r.universal);
  if (!fr.ok() || !nr.ok()) throw InternalInconsistency("kan_extension: " + fr.summary() + nr.summary());
  (void)A;
  return r;
}

/// α ↦ ε • α s (right) or α s • η (left).
inline NaturalTransformation kan_restrict(const KanExtensionResult& ext, const NaturalTransformation& alpha) {
  if (ext.side == Side::right) return vertical(ext.universal, whisker_left(alpha, ext.s));
  return vertical(whisker_left(alpha, ext.s), ext.universal);
}

/// Inverse of kan_restrict: for h : Y → A and β : h∘s ⇒ τ (right) or
/// β : τ ⇒ h∘s (left), the unique α : h ⇒ R (right) or α : L ⇒ h (left).
inline NaturalTransformation kan_factor(const KanExtensionResult& ext, const Functor& h,
                                        const NaturalTransformation& beta) {
  if (!ext.pointwise) throw PreconditionError("kan_factor: extension carries no pointwise data");
  const auto& Y = *ext.s.target;
  const auto& A = *ext.tau.target;
  const bool right = ext.side == Side::right;
  const auto v = detail::variance_of(ext.side);
  std::vector<MorId> comps;
  for (ObjId y = 0; y < Y.num_objects(); ++y) {
    const auto& cc = ext.commas[y];
    Cone other{h.obj(y), {}};
    for (const auto& o : cc.data) {
      if (right) other.legs.push_back(A.compose(beta.at(o.right), h.mor(o.arrow)));
      else other.legs.push_back(A.compose(h.mor(o.arrow), beta.at(o.left)));
    }
    auto d = compose(ext.tau, right ? cc.proj_right : cc.proj_left);
    auto g = factor_through(d, ext.cones[y], other, v);
    if (!g) throw PreconditionError("kan_factor: β does not induce a (co)cone");
    comps.push_back(*g);
  }
  return right ? NaturalTransformation{h, ext.extension, comps} : NaturalTransformation{ext.extension, h, comps};
}

struct UniversalityReport {
  CheckStatus status = CheckStatus::verified;
  std::size_t functors_checked = 0;
  std::size_t cells_checked = 0;
  std::vector<std::string> failures;
};

/// For every h : Y → A, checks hom(h, R) ≅ hom(h∘s, τ) (right) or
/// hom(L, h) ≅ hom(τ, h∘s) (left) via kan_restrict and kan_factor, with both
/// composites equal to the identity.
inline UniversalityReport verify_kan_universality(const KanExtensionResult& ext, EnumerationCap cap = {}) {
  UniversalityReport rep;
  const bool right = ext.side == Side::right;
  try {
    for (const auto& h : enumerate_functors(ext.s.target, ext.tau.target, cap)) {
      ++rep.functors_checked;
      auto hs = compose(h, ext.s);
      auto lhs = right ? enumerate_nat_trans(h, ext.extension, cap) : enumerate_nat_trans(ext.extension, h, cap);
      auto rhs = right ? enumerate_nat_trans(hs, ext.tau, cap) : enumerate_nat_trans(ext.tau, hs, cap);
      if (lhs.size() != rhs.size()) {
        rep.failures.push_back("size mismatch " + std::to_string(lhs.size()) + " vs " + std::to_string(rhs.size()));
        continue;
      }
      for (const auto& alpha : lhs) {
        ++rep.cells_checked;
        if (!(kan_factor(ext, h, kan_restrict(ext, alpha)) == alpha)) rep.failures.push_back("factor∘restrict ≠ id");
      }
      for (const auto& beta : rhs)
        if (!(kan_restrict(ext, kan_factor(ext, h, beta)) == beta)) rep.failures.push_back("restrict∘factor ≠ id");
    }
  } catch (const ResourceError&) {
    rep.status = CheckStatus::skipped_cap;
    return rep;
  } catch (const PreconditionError& e) {
    rep.failures.push_back(e.what());
  }
  if (!rep.failures.empty()) rep.status = CheckStatus::failed;
  return rep;
}

struct ProbeResult {
  std::string probe;
  bool pass = false;
  std::string detail;
};

/// Stability under comma squares. For a probe i : I → Y, (ext∘i, restricted
/// 2-cell) must itself be the Kan extension of τ along the comma projection;
/// the comparison with a freshly computed extension must be a natural iso.
/// Only `extension` and `universal` of ext are read, so tampered results can
/// be checked.
inline std::vector<ProbeResult> is_pointwise(const KanExtensionResult& ext, std::vector<Functor> probes = {},
                                             EnumerationCap cap = {}) {
  const auto& Y = *ext.s.target;
  const auto& A = *ext.tau.target;
  const bool right = ext.side == Side::right;
  if (probes.empty()) {
    probes.push_back(identity_functor(ext.s.target));
    for (ObjId y = 0; y < Y.num_objects(); ++y) probes.push_back(object_picker(ext.s.target, y));
  }
  std::vector<ProbeResult> out;
  for (std::size_t n = 0; n < probes.size(); ++n) {
    const auto& i = probes[n];
    ProbeResult pr;
    pr.probe = n == 0 && i.source == ext.s.target ? "identity"
                                                  : "probe " + std::to_string(n) + " (" +
                                                        std::to_string(i.source->num_objects()) + " objects)";
    if (i.source->num_objects() == 1 && i.source->num_morphisms() == 1) pr.probe = "at " + Y.object_name(i.obj(0));
    auto cc = right ? comma_category(i, ext.s) : comma_category(ext.s, i);
    auto ri = compose(ext.extension, i);
    std::vector<MorId> comps;
    NaturalTransformation cell;
    if (right) {
      // ε p2 • R π : R i p1 ⇒ τ p2
      for (const auto& o : cc.data) comps.push_back(A.compose(ext.universal.at(o.right), ext.extension.mor(o.arrow)));
      cell = NaturalTransformation{compose(ri, cc.proj_left), compose(ext.tau, cc.proj_right), comps};
    } else {
      // L π • η p1 : τ p1 ⇒ L i p2
      for (const auto& o : cc.data) comps.push_back(A.compose(ext.extension.mor(o.arrow), ext.universal.at(o.left)));
      cell = NaturalTransformation{compose(ext.tau, cc.proj_left), compose(ri, cc.proj_right), comps};
    }
    auto fresh = right ? kan_extension(compose(ext.tau, cc.proj_right), cc.proj_left, Side::right, cap)
                       : kan_extension(compose(ext.tau, cc.proj_left), cc.proj_right, Side::left, cap);
    if (!fresh) {
      pr.detail = "restricted diagram has no Kan extension";
      out.push_back(pr);
      continue;
    }
    try {
      auto cmp = kan_factor(*fresh, ri, cell);
      pr.pass = is_natural_iso(cmp);
      if (!pr.pass) pr.detail = "comparison is not invertible";
    } catch (const PreconditionError& e) {
      pr.detail = e.what();
    }
    out.push_back(pr);
  }
  return out;
}

inline bool all_pass(const std::vector<ProbeResult>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

}  // namespace catwb::kan
