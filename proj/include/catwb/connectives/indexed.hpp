#pragma once

#include <string>
#include <vector>

#include "catwb/connectives/internal.hpp"

namespace catwb::connectives {

/// A split indexed category Φ : B^op → Cat over a finite base.
/// reindex[u] for u : I → J is Φ(u) : Φ(J) → Φ(I).
struct IndexedCategory {
  CatPtr base;
  std::vector<CatPtr> fibers;
  std::vector<Functor> reindex;
  bool split = true;

  const CatPtr& fiber(ObjId i) const { return fibers.at(i); }
};

inline ValidationReport validate_split(const IndexedCategory& phi) {
  ValidationReport r;
  const auto& B = *phi.base;
  if (phi.fibers.size() != B.num_objects() || phi.reindex.size() != B.num_morphisms()) {
    r.add("indexed-shape", {});
    return r;
  }
  for (MorId u = 0; u < B.num_morphisms(); ++u) {
    const auto& f = phi.reindex[u];
    if (!same_category(f.source, phi.fibers[B.cod(u)]) || !same_category(f.target, phi.fibers[B.dom(u)]))
      r.add("reindex-typing", {B.morphism_name(u)});
  }
  if (!r.ok()) return r;
  for (ObjId i = 0; i < B.num_objects(); ++i)
    if (!(phi.reindex[B.identity(i)] == identity_functor(phi.fibers[i]))) r.add("split-identity", {B.object_name(i)});
  // Φ(g ∘ f) = Φ(f) ∘ Φ(g)
  for (MorId f = 0; f < B.num_morphisms(); ++f)
    for (MorId g : B.out(B.cod(f)))
      if (!(phi.reindex[B.compose(g, f)] == compose(phi.reindex[f], phi.reindex[g])))
        r.add("split-composition", {B.morphism_name(g), B.morphism_name(f)});
  return r;
}

struct FiberwiseCccReport {
  bool pass = false;
  std::vector<CccReport> fibers;
  std::vector<std::string> failures;  // located failure descriptions
};

/// Each fiber must have a terminal object, products and exponents, and every
/// reindexing functor must preserve them up to isomorphism.
inline FiberwiseCccReport fiberwise_ccc(const IndexedCategory& phi, EnumerationCap cap = {}) {
  if (!phi.split) throw PreconditionError("fiberwise_ccc: indexed category is not split");
  FiberwiseCccReport out;
  const auto& B = *phi.base;
  for (ObjId i = 0; i < B.num_objects(); ++i) {
    auto rep = internal_ccc(phi.fibers[i], cap);
    const auto at = "fiber " + B.object_name(i) + ": ";
    if (!rep.connectives.terminal.exists) out.failures.push_back(at + rep.connectives.terminal.absence);
    if (!rep.connectives.products.exists) out.failures.push_back(at + rep.connectives.products.absence);
    else if (!rep.entry.exists) out.failures.push_back(at + rep.entry.absence);
    out.fibers.push_back(std::move(rep));
  }
  if (out.failures.empty()) {
    for (MorId u = 0; u < B.num_morphisms(); ++u) {
      if (B.is_identity(u)) continue;
      const auto& f = phi.reindex[u];
      const auto& src = out.fibers[B.cod(u)];
      const auto& dst = out.fibers[B.dom(u)];
      const auto& D = *dst.connectives.category;
      const auto at = "reindex " + B.morphism_name(u) + ": ";
      if (!objects_isomorphic(D, f.obj(src.connectives.top()), dst.connectives.top()))
        out.failures.push_back(at + "terminal not preserved");
      const auto n = src.connectives.category->num_objects();
      for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b) {
          if (!objects_isomorphic(D, f.obj(src.connectives.meet(a, b)), dst.connectives.meet(f.obj(a), f.obj(b))))
            out.failures.push_back(at + "product of " + src.connectives.category->object_name(a) + "," +
                                   src.connectives.category->object_name(b) + " not preserved");
          if (!objects_isomorphic(D, f.obj(src.exponent(b, a)), dst.exponent(f.obj(b), f.obj(a))))
            out.failures.push_back(at + "exponent " + src.connectives.category->object_name(b) + "^" +
                                   src.connectives.category->object_name(a) + " not preserved");
        }
    }
  }
  out.pass = out.failures.empty();
  return out;
}

}  // namespace catwb::connectives
