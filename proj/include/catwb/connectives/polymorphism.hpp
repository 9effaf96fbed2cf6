#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catwb/kan/limits.hpp"

namespace catwb::connectives {

/// A family of objects of C indexed by {0, …, n-1}.
struct SetFamily {
  CatPtr category;
  std::vector<ObjId> values;

  std::size_t size() const { return values.size(); }
  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return same_category(a.category, b.category) && a.values == b.values;
  }
};

enum class AdhocSide { product, coproduct };

/// Value of ∏_s τ (or ∐_s τ) at every i, with its universal (co)cone over
/// the fiber s⁻¹(i), and whether the introduction/elimination bijection
/// hom(c, ∏ τ_j) ≅ ∏_j hom(c, τ_j) was confirmed at every object c.
struct AdhocProduct {
  SetFamily family;
  std::vector<std::vector<std::size_t>> fibers;
  std::vector<kan::Cone> cones;
  bool rules_verified = false;
};

inline Functor discrete_diagram(const CatPtr& c, const std::vector<ObjId>& values) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < values.size(); ++k) names.push_back("j" + std::to_string(k));
  auto j = discrete_category(names);
  Functor d{j, c, {}, {}};
  // discrete_category sorts names; map each back to its index
  for (ObjId o = 0; o < j->num_objects(); ++o) {
    ObjId v = values[std::stoul(j->object_name(o).substr(1))];
    d.objects.push_back(v);
    d.morphisms.push_back(c->identity(v));
  }
  return d;
}

/// Universal (co)cone over a finite family, with legs in family order.
inline std::optional<kan::Cone> family_limit(const CatPtr& c, const std::vector<ObjId>& values, AdhocSide side,
                                             EnumerationCap cap = {}) {
  auto d = discrete_diagram(c, values);
  auto v = side == AdhocSide::product ? kan::Variance::limit : kan::Variance::colimit;
  auto cone = kan::universal_cone(d, v, cap);
  if (!cone) return std::nullopt;
  kan::Cone out{cone->apex, std::vector<MorId>(values.size())};
  for (ObjId o = 0; o < d.source->num_objects(); ++o)
    out.legs[std::stoul(d.source->object_name(o).substr(1))] = cone->legs[o];
  return out;
}

inline bool check_adhoc_rules(const FiniteCategory& C, const kan::Cone& cone, AdhocSide side) {
  for (ObjId c = 0; c < C.num_objects(); ++c) {
    auto hom = side == AdhocSide::product ? C.hom(c, cone.apex) : C.hom(cone.apex, c);
    std::size_t expected = 1;
    for (MorId leg : cone.legs)
      expected *= (side == AdhocSide::product ? C.hom(c, C.cod(leg)) : C.hom(C.dom(leg), c)).size();
    if (hom.size() != expected) return false;
    std::vector<std::vector<MorId>> images;
    for (MorId g : hom) {
      std::vector<MorId> t;
      for (MorId leg : cone.legs) t.push_back(side == AdhocSide::product ? C.compose(leg, g) : C.compose(g, leg));
      images.push_back(std::move(t));
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
  }
  return true;
}

/// ∏_s τ : value at i is the product of {τ_j : s(j) = i}; an empty fiber
/// gives the terminal object. None if some required (co)limit is missing.
inline std::optional<AdhocProduct> adhoc_product(const SetFamily& family, const std::vector<std::size_t>& s,
                                                 std::size_t codomain_size, AdhocSide side = AdhocSide::product,
                                                 EnumerationCap cap = {}) {
  if (s.size() != family.size()) throw PreconditionError("adhoc_product: index map has the wrong domain");
  AdhocProduct out;
  out.family.category = family.category;
  out.fibers.resize(codomain_size);
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] >= codomain_size) throw PreconditionError("adhoc_product: index map leaves its codomain");
    out.fibers[s[j]].push_back(j);
  }
  out.rules_verified = true;
  for (const auto& fiber : out.fibers) {
    std::vector<ObjId> values;
    for (auto j : fiber) values.push_back(family.values[j]);
    auto cone = family_limit(family.category, values, side, cap);
    if (!cone) return std::nullopt;
    out.rules_verified = out.rules_verified && check_adhoc_rules(*family.category, *cone, side);
    out.family.values.push_back(cone->apex);
    out.cones.push_back(std::move(*cone));
  }
  return out;
}

/// Commuting square of finite sets
///
///   P --π2--> Y'
///   |π1       |i
///   v         v
///   X  --s--> Y
struct SetSquare {
  std::size_t p = 0, x = 0, y_prime = 0, y = 0;
  std::vector<std::size_t> pi1, pi2, s, i;
};

/// Whether the square is a pullback: (π1, π2) is a bijection onto
/// {(x, y') : s x = i y'}.
inline bool is_pullback(const SetSquare& q) {
  std::vector<std::pair<std::size_t, std::size_t>> image;
  for (std::size_t k = 0; k < q.p; ++k) image.emplace_back(q.pi1[k], q.pi2[k]);
  std::sort(image.begin(), image.end());
  std::vector<std::pair<std::size_t, std::size_t>> expected;
  for (std::size_t a = 0; a < q.x; ++a)
    for (std::size_t b = 0; b < q.y_prime; ++b)
      if (q.s[a] == q.i[b]) expected.emplace_back(a, b);
  return image == expected;
}

struct BeckChevalleyReport {
  bool is_pullback = false;
  SetFamily reindexed_product;  // Φ(i) ∘ ∏_s τ, over Y'
  SetFamily product_of_reindexed;  // ∏_{π2} ∘ Φ(π1) τ, over Y'
  std::vector<MorId> comparison;  // canonical map, per y'
  std::vector<bool> iso;
  bool ok = false;  // pullback and every comparison an isomorphism
};

/// Computes both sides on τ over X and the canonical comparison
/// (∏_s τ)(i y') → ∏_{π2 p = y'} τ(π1 p). Throws on a non-commuting square;
/// a commuting square that is not a pullback is reported with
/// is_pullback = false and its comparison still evaluated.
inline BeckChevalleyReport beck_chevalley_check(const SetSquare& q, const SetFamily& tau, EnumerationCap cap = {}) {
  auto check = [](const std::vector<std::size_t>& f, std::size_t dom, std::size_t cod, const char* name) {
    if (f.size() != dom) throw PreconditionError(std::string("beck_chevalley_check: ") + name + " has the wrong domain");
    for (auto v : f)
      if (v >= cod) throw PreconditionError(std::string("beck_chevalley_check: ") + name + " leaves its codomain");
  };
  check(q.pi1, q.p, q.x, "pi1");
  check(q.pi2, q.p, q.y_prime, "pi2");
  check(q.s, q.x, q.y, "s");
  check(q.i, q.y_prime, q.y, "i");
  if (tau.size() != q.x) throw PreconditionError("beck_chevalley_check: family is not indexed by X");
  for (std::size_t k = 0; k < q.p; ++k)
    if (q.s[q.pi1[k]] != q.i[q.pi2[k]]) throw PreconditionError("beck_chevalley_check: square does not commute");

  const auto& C = *tau.category;
  BeckChevalleyReport r;
  r.is_pullback = is_pullback(q);
  auto lhs = adhoc_product(tau, q.s, q.y, AdhocSide::product, cap);
  SetFamily pulled{tau.category, {}};
  for (std::size_t k = 0; k < q.p; ++k) pulled.values.push_back(tau.values[q.pi1[k]]);
  auto rhs = adhoc_product(pulled, q.pi2, q.y_prime, AdhocSide::product, cap);
  if (!lhs || !rhs) throw PreconditionError("beck_chevalley_check: C lacks a required product");

  r.reindexed_product.category = r.product_of_reindexed.category = tau.category;
  for (std::size_t b = 0; b < q.y_prime; ++b) {
    const std::size_t y = q.i[b];
    r.reindexed_product.values.push_back(lhs->family.values[y]);
    r.product_of_reindexed.values.push_back(rhs->family.values[b]);
    // legs of the reindexed cone, one per p over b
    const auto& lfiber = lhs->fibers[y];
    kan::Cone other{lhs->family.values[y], {}};
    for (auto k : rhs->fibers[b]) {
      auto pos = std::find(lfiber.begin(), lfiber.end(), q.pi1[k]) - lfiber.begin();
      other.legs.push_back(lhs->cones[y].legs[pos]);
    }
    std::vector<ObjId> values;
    for (auto k : rhs->fibers[b]) values.push_back(pulled.values[k]);
    auto d = discrete_diagram(tau.category, values);
    // factor_through indexes legs by objects of the diagram's (sorted) source
    kan::Cone universal{rhs->cones[b].apex, std::vector<MorId>(values.size())};
    kan::Cone probe{other.apex, std::vector<MorId>(values.size())};
    for (ObjId o = 0; o < d.source->num_objects(); ++o) {
      auto idx = std::stoul(d.source->object_name(o).substr(1));
      universal.legs[o] = rhs->cones[b].legs[idx];
      probe.legs[o] = other.legs[idx];
    }
    auto g = kan::factor_through(d, universal, probe, kan::Variance::limit);
    if (!g) throw InternalInconsistency("beck_chevalley_check: comparison does not factor");
    r.comparison.push_back(*g);
    r.iso.push_back(is_iso(C, *g));
  }
  r.ok = r.is_pullback && std::all_of(r.iso.begin(), r.iso.end(), [](bool b) { return b; });
  return r;
}

}  // namespace catwb::connectives
