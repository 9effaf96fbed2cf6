#pragma once

#include <utility>

#include "catwb/connectives/internal.hpp"

namespace catwb::connectives {

/// Typing rules of the simply typed lambda calculus executed on morphisms of
/// a category with internal connectives. Every rule goes through an adjunction
/// transpose; eliminators invert introductions.
class LambdaRules {
 public:
  explicit LambdaRules(CccReport ccc) : ccc_(std::move(ccc)) {
    if (!ccc_.connectives.cartesian()) throw PreconditionError("lambda rules need a terminal object and products");
    if (!ccc_.entry.exists) throw PreconditionError("lambda rules need internal exponents");
  }

  const FiniteCategory& category() const { return *ccc_.connectives.category; }
  const CccReport& report() const { return ccc_; }

  // id and com
  MorId id(ObjId a) const { return category().identity(a); }
  MorId com(MorId g, MorId f) const { return category().compose(g, f); }

  // 1-int : c → ⊤
  MorId unit_intro(ObjId c) const {
    const auto& adj = *ccc_.connectives.terminal.witness;
    return kan::transpose_right(adj, c, adj.left.target->identity(0));
  }

  // 0-int : ⊥ → c
  MorId zero_intro(ObjId c) const {
    const auto& conn = ccc_.connectives;
    if (!conn.initial.exists) throw PreconditionError("no internal initial object");
    const auto& adj = *conn.initial.witness;
    return kan::transpose_left(adj, c, adj.left.source->identity(0));
  }

  // ×-int : (f : c → a, g : c → b) ↦ ⟨f, g⟩ : c → a ⊓ b
  MorId pair_intro(MorId f, MorId g) const {
    const auto& conn = ccc_.connectives;
    const auto& A = category();
    if (A.dom(f) != A.dom(g)) throw PreconditionError("pair_intro: premises have different domains");
    return kan::transpose_right(*conn.products.witness, A.dom(f), conn.square.morphism(f, g));
  }

  // ×-eli : h : c → a ⊓ b ↦ (π₁ h, π₂ h)
  std::pair<MorId, MorId> pair_elim(MorId h, ObjId a, ObjId b) const {
    const auto& conn = ccc_.connectives;
    if (category().cod(h) != conn.meet(a, b)) throw PreconditionError("pair_elim: codomain is not a ⊓ b");
    return conn.square.morphism_components[kan::transpose_left(*conn.products.witness, conn.square.object(a, b), h)];
  }

  // ⊔-int : (f : a → c, g : b → c) ↦ [f, g] : a ⊔ b → c
  MorId copair_intro(MorId f, MorId g) const {
    const auto& conn = ccc_.connectives;
    const auto& A = category();
    if (!conn.coproducts.exists) throw PreconditionError("no internal coproducts");
    if (A.cod(f) != A.cod(g)) throw PreconditionError("copair_intro: premises have different codomains");
    return kan::transpose_left(*conn.coproducts.witness, A.cod(f), conn.square.morphism(f, g));
  }

  // ⊔-eli : h : a ⊔ b → c ↦ (h ι₁, h ι₂)
  std::pair<MorId, MorId> copair_elim(MorId h, ObjId a, ObjId b) const {
    const auto& conn = ccc_.connectives;
    if (!conn.coproducts.exists) throw PreconditionError("no internal coproducts");
    if (category().dom(h) != conn.join(a, b)) throw PreconditionError("copair_elim: domain is not a ⊔ b");
    return conn.square.morphism_components[kan::transpose_right(*conn.coproducts.witness, conn.square.object(a, b), h)];
  }

  // λ-int : f : c ⊓ x → b ↦ λf : c → b^x
  MorId lambda_intro(MorId f, ObjId c, ObjId x) const {
    const auto& d = ccc_.closed->domain;
    const auto& A = category();
    if (A.dom(f) != ccc_.connectives.meet(c, x)) throw PreconditionError("lambda_intro: domain is not c ⊓ x");
    MorId k = d.morphism(f, d.right->identity(x));
    return d.morphism_components[kan::transpose_right(*ccc_.entry.witness, d.object(c, x), k)].first;
  }

  // λ-eli : g : c → b^x ↦ c ⊓ x → b
  MorId lambda_elim(MorId g, ObjId b, ObjId x) const {
    const auto& d = ccc_.closed->domain;
    if (category().cod(g) != ccc_.exponent(b, x)) throw PreconditionError("lambda_elim: codomain is not b^x");
    MorId k = d.morphism(g, d.right->identity(x));
    return d.morphism_components[kan::transpose_left(*ccc_.entry.witness, d.object(b, x), k)].first;
  }

  // ev : b^x ⊓ x → b
  MorId eval(ObjId b, ObjId x) const { return lambda_elim(id(ccc_.exponent(b, x)), b, x); }

 private:
  CccReport ccc_;
};

/// Runs every introduction/elimination pair over all premises of A and
/// checks that the round trips restore them.
inline ValidationReport check_lambda_rules(const LambdaRules& rules) {
  ValidationReport r;
  const auto& A = rules.category();
  const auto& conn = rules.report().connectives;
  const auto n = A.num_objects();
  for (ObjId c = 0; c < n; ++c) {
    MorId t = rules.unit_intro(c);
    if (A.dom(t) != c || A.cod(t) != conn.top() || A.hom(c, conn.top()).size() != 1) r.add("1-int", {A.object_name(c)});
    if (conn.initial.exists) {
      MorId z = rules.zero_intro(c);
      if (A.dom(z) != conn.bottom() || A.cod(z) != c || A.hom(conn.bottom(), c).size() != 1)
        r.add("0-int", {A.object_name(c)});
    }
  }
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId c = 0; c < n; ++c) {
        for (MorId f : A.hom(c, a))
          for (MorId g : A.hom(c, b))
            if (rules.pair_elim(rules.pair_intro(f, g), a, b) != std::pair{f, g})
              r.add("x-int/eli", {A.morphism_name(f), A.morphism_name(g)});
        for (MorId h : A.hom(c, conn.meet(a, b))) {
          auto [f, g] = rules.pair_elim(h, a, b);
          if (rules.pair_intro(f, g) != h) r.add("x-eli/int", {A.morphism_name(h)});
        }
        if (conn.coproducts.exists) {
          for (MorId f : A.hom(a, c))
            for (MorId g : A.hom(b, c))
              if (rules.copair_elim(rules.copair_intro(f, g), a, b) != std::pair{f, g})
                r.add("+-int/eli", {A.morphism_name(f), A.morphism_name(g)});
          for (MorId h : A.hom(conn.join(a, b), c)) {
            auto [f, g] = rules.copair_elim(h, a, b);
            if (rules.copair_intro(f, g) != h) r.add("+-eli/int", {A.morphism_name(h)});
          }
        }
        // here a plays the exponent x
        for (MorId f : A.hom(conn.meet(c, a), b))
          if (rules.lambda_elim(rules.lambda_intro(f, c, a), b, a) != f) r.add("lambda-int/eli", {A.morphism_name(f)});
        for (MorId g : A.hom(c, rules.report().exponent(b, a)))
          if (rules.lambda_intro(rules.lambda_elim(g, b, a), c, a) != g) r.add("lambda-eli/int", {A.morphism_name(g)});
      }
  // com with id
  for (MorId f = 0; f < A.num_morphisms(); ++f)
    if (rules.com(rules.id(A.cod(f)), f) != f || rules.com(f, rules.id(A.dom(f))) != f)
      r.add("id/com", {A.morphism_name(f)});
  return r;
}

}  // namespace catwb::connectives
