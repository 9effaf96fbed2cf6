#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "catwb/core/functor_category.hpp"
#include "catwb/freyd/tensor.hpp"
#include "catwb/internalcat/internal_category.hpp"
#include "catwb/kan/adjoint.hpp"
#include "catwb/kan/kan_extension.hpp"

namespace catwb::freyd {

enum class LemmaVerdict { extension_exists, extension_missing };

inline const char* to_string(LemmaVerdict v) {
  return v == LemmaVerdict::extension_exists ? "extension_exists" : "extension_missing";
}

struct IncompletenessReport {
  std::size_t lambda = 0;
  std::size_t hom_ab = 0;      // |hom(a, b)|
  std::size_t hom_tensor = 0;  // |hom(a∘∇, b∘∇)|
  std::size_t choices = 0;     // distinct cells built by picking f or g per copy
  bool kan_exists = false;
  std::optional<std::size_t> hom_ran;  // |hom(a, ran_∇(b∘∇))|
  bool bijection_verified = false;
  LemmaVerdict verdict = LemmaVerdict::extension_missing;

  std::uint64_t lower_bound() const { return std::uint64_t{1} << lambda; }
};

namespace detail {

/// The cell a∘∇ ⇒ b∘∇ that is f on copy k when bit k of `mask` is clear and g
/// otherwise.
inline NaturalTransformation choice_cell(const Tensor& t, const NaturalTransformation& f,
                                         const NaturalTransformation& g, std::uint64_t mask) {
  NaturalTransformation out{compose(f.source, t.codiagonal), compose(f.target, t.codiagonal), {}};
  for (ObjId o = 0; o < t.category()->num_objects(); ++o) {
    auto [k, x] = t.coproduct.object_origin[o];
    out.components.push_back(((mask >> k) & 1U) ? g.at(x) : f.at(x));
  }
  return out;
}

}  // namespace detail

/// Counting lemma on a pair of distinct parallel cells f, g : a ⇒ b.
inline IncompletenessReport incompleteness_witness(const Functor& a, const Functor& b, const NaturalTransformation& f,
                                                   const NaturalTransformation& g, std::size_t lambda,
                                                   EnumerationCap cap = {}) {
  if (!parallel(a, b)) throw PreconditionError("incompleteness_witness: a and b are not parallel");
  if (!(f.source == a && f.target == b && g.source == a && g.target == b))
    throw PreconditionError("incompleteness_witness: f and g must be cells a => b");
  if (f.components == g.components) throw PreconditionError("incompleteness_witness: f and g coincide");
  if (!validate_natural(f).ok() || !validate_natural(g).ok())
    throw PreconditionError("incompleteness_witness: f or g is not natural");
  if (lambda >= 63) throw PreconditionError("incompleteness_witness: lambda too large");

  IncompletenessReport r;
  r.lambda = lambda;
  const auto t = tensor_with_set(lambda, a.source);
  const auto an = compose(a, t.codiagonal);
  const auto bn = compose(b, t.codiagonal);
  r.hom_ab = enumerate_nat_trans(a, b, cap).size();
  auto cells = enumerate_nat_trans(an, bn, cap);
  r.hom_tensor = cells.size();

  std::vector<std::vector<MorId>> chosen;
  CapCounter counter(cap, "incompleteness_witness");
  for (std::uint64_t mask = 0; mask < r.lower_bound(); ++mask) {
    counter.tick();
    auto cell = detail::choice_cell(t, f, g, mask);
    if (!validate_natural(cell).ok()) throw InternalInconsistency("incompleteness_witness: chosen cell not natural");
    chosen.push_back(cell.components);
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  r.choices = chosen.size();

  std::uint64_t power = 1;
  for (std::size_t k = 0; k < lambda; ++k) power *= r.hom_ab;
  if (r.hom_tensor != power || r.choices != r.lower_bound())
    throw InternalInconsistency("incompleteness_witness: counts disagree with the free choice per copy");

  auto ext = kan::kan_extension(bn, t.codiagonal, kan::Side::right, cap);
  r.kan_exists = ext.has_value();
  if (!ext) return r;

  r.verdict = LemmaVerdict::extension_exists;
  auto ran_cells = enumerate_nat_trans(a, ext->extension, cap);
  r.hom_ran = ran_cells.size();
  for (const auto& alpha : ran_cells)
    if (!(kan::kan_factor(*ext, a, kan::kan_restrict(*ext, alpha)) == alpha)) return r;
  for (const auto& beta : cells)
    if (!(kan::kan_restrict(*ext, kan::kan_factor(*ext, a, beta)) == beta)) return r;
  r.bijection_verified = *r.hom_ran == r.hom_tensor;
  return r;
}

// ---------------------------------------------------------------------------
// Audit

struct PosetalCertificate {
  internalcat::PosetalityReport posetality;
};

struct NonExistenceWitness {
  std::size_t morphisms = 0;  // |mor C|
  std::size_t lambda = 0;     // least λ with 2^λ > |mor C|
  ObjId a = kNoId, b = kNoId;
  MorId f = kNoId, g = kNoId;
  IncompletenessReport lemma;  // on a, b : 1 → C
  bool delta_has_right_adjoint = false;
  std::string delta_obstruction;  // object of C^λ without a universal arrow
  std::vector<bool> kan_exists;   // ran_∇(c∘∇) per object c of C
  bool agree = false;             // Δ_λ has a right adjoint iff every ran_∇(c∘∇) exists

  std::uint64_t power() const { return std::uint64_t{1} << lambda; }
  std::string obstruction() const {
    return "2^" + std::to_string(lambda) + " = " + std::to_string(power()) + " > " + std::to_string(morphisms);
  }
};

using FreydVerdict = std::variant<PosetalCertificate, NonExistenceWitness>;

inline bool is_posetal(const FreydVerdict& v) { return std::holds_alternative<PosetalCertificate>(v); }

/// Δ : C → C^λ, with C^λ the functor category on the discrete λ.
inline Functor diagonal_functor(const CatPtr& c, const FunctorCategory& power) {
  const auto& C = *c;
  Functor d{c, power.category, {}, {}};
  for (ObjId o = 0; o < C.num_objects(); ++o) d.objects.push_back(power.object_of(constant_functor(power.domain, c, o)));
  for (MorId m = 0; m < C.num_morphisms(); ++m) {
    NaturalTransformation t{constant_functor(power.domain, c, C.dom(m)), constant_functor(power.domain, c, C.cod(m)),
                            std::vector<MorId>(power.domain->num_objects(), m)};
    d.morphisms.push_back(power.morphism_of(t));
  }
  return d;
}

inline FreydVerdict finite_freyd_audit(const CatPtr& c, EnumerationCap cap = {}) {
  const auto& C = *c;
  auto posetality = internalcat::representably_posetal_check(c, {terminal_category()}, cap);
  if (!posetality.agree) throw InternalInconsistency("finite_freyd_audit: posetality and internal poset disagree");
  if (posetality.posetal) return PosetalCertificate{posetality};

  NonExistenceWitness w;
  w.morphisms = C.num_morphisms();
  while ((std::uint64_t{1} << w.lambda) <= w.morphisms) ++w.lambda;
  for (ObjId x = 0; x < C.num_objects() && w.f == kNoId; ++x)
    for (ObjId y = 0; y < C.num_objects() && w.f == kNoId; ++y) {
      auto h = C.hom(x, y);
      if (h.size() >= 2) {
        w.a = x;
        w.b = y;
        w.f = h[0];
        w.g = h[1];
      }
    }
  if (w.f == kNoId) throw InternalInconsistency("finite_freyd_audit: non-posetal category without parallel arrows");

  auto pa = object_picker(c, w.a), pb = object_picker(c, w.b);
  w.lemma = incompleteness_witness(pa, pb, NaturalTransformation{pa, pb, {w.f}}, NaturalTransformation{pa, pb, {w.g}},
                                   w.lambda, cap);
  if (w.lemma.kan_exists) throw InternalInconsistency("finite_freyd_audit: extension exists despite " + w.obstruction());

  const auto t = tensor_with_set(w.lambda, terminal_category());
  auto power = functor_category(t.category(), c, cap);
  auto search = kan::search_adjoint(diagonal_functor(c, power), kan::Side::right, cap);
  w.delta_has_right_adjoint = search.adjunction.has_value();
  if (search.obstruction != kNoId) w.delta_obstruction = power.category->object_name(search.obstruction);

  bool all = true;
  for (ObjId o = 0; o < C.num_objects(); ++o) {
    bool e = kan::kan_extension(compose(object_picker(c, o), t.codiagonal), t.codiagonal, kan::Side::right, cap)
                 .has_value();
    w.kan_exists.push_back(e);
    all = all && e;
  }
  w.agree = w.delta_has_right_adjoint == all;
  return w;
}

}  // namespace catwb::freyd
