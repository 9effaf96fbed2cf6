#pragma once

#include <functional>
#include <string>
#include <vector>

#include "catwb/core/cap.hpp"
#include "catwb/core/functor.hpp"

namespace catwb {

namespace detail {

struct CompositionCheck {
  MorId g, f, h;  // require F(h) = F(g) ∘ F(f)
};

struct FunctorSearchPlan {
  struct Step {
    bool object = true;
    std::uint32_t id = 0;
    std::vector<CompositionCheck> checks;  // all of g, f, h fixed once this step is done
  };
  std::vector<Step> steps;
};

inline FunctorSearchPlan plan_functor_search(const FiniteCategory& x) {
  FunctorSearchPlan plan;
  std::vector<std::uint32_t> step_of(x.num_morphisms(), 0);
  for (ObjId k = 0; k < x.num_objects(); ++k) {
    plan.steps.push_back({true, k, {}});
    step_of[x.identity(k)] = static_cast<std::uint32_t>(plan.steps.size() - 1);
    for (MorId m = 0; m < x.num_morphisms(); ++m) {
      if (x.is_identity(m)) continue;
      const ObjId d = x.dom(m), c = x.cod(m);
      if (std::max(d, c) != k) continue;
      plan.steps.push_back({false, m, {}});
      step_of[m] = static_cast<std::uint32_t>(plan.steps.size() - 1);
    }
  }
  for (MorId f = 0; f < x.num_morphisms(); ++f) {
    if (x.is_identity(f)) continue;
    for (MorId g : x.out(x.cod(f))) {
      if (x.is_identity(g)) continue;
      MorId h = x.compose(g, f);
      auto s = std::max({step_of[g], step_of[f], step_of[h]});
      plan.steps[s].checks.push_back({g, f, h});
    }
  }
  return plan;
}

}  // namespace detail

/// Every functor X → C, in the lexicographic order of (object images, then
/// morphism images) along the search plan.
inline std::vector<Functor> enumerate_functors(const CatPtr& x, const CatPtr& c, EnumerationCap cap = {}) {
  const auto plan = detail::plan_functor_search(*x);
  CapCounter counter(cap, "enumerate_functors");
  std::vector<Functor> out;
  std::vector<ObjId> obj(x->num_objects(), kNoId);
  std::vector<MorId> mor(x->num_morphisms(), kNoId);

  std::function<void(std::size_t)> go = [&](std::size_t s) {
    if (s == plan.steps.size()) {
      out.push_back(Functor{x, c, obj, mor});
      counter.tick();
      return;
    }
    const auto& step = plan.steps[s];
    auto checks_hold = [&] {
      for (const auto& ck : step.checks)
        if (c->compose(mor[ck.g], mor[ck.f]) != mor[ck.h]) return false;
      return true;
    };
    if (step.object) {
      for (ObjId y = 0; y < c->num_objects(); ++y) {
        counter.tick();
        obj[step.id] = y;
        mor[x->identity(step.id)] = c->identity(y);
        if (checks_hold()) go(s + 1);
      }
      obj[step.id] = kNoId;
    } else {
      for (MorId m : c->hom(obj[x->dom(step.id)], obj[x->cod(step.id)])) {
        counter.tick();
        mor[step.id] = m;
        if (checks_hold()) go(s + 1);
      }
      mor[step.id] = kNoId;
    }
  };
  go(0);
  return out;
}

/// Every natural transformation F ⇒ G, ordered lexicographically by components.
inline std::vector<NaturalTransformation> enumerate_nat_trans(const Functor& f, const Functor& g,
                                                              EnumerationCap cap = {}) {
  if (!parallel(f, g)) throw PreconditionError("enumerate_nat_trans: functors are not parallel");
  const auto& x = *f.source;
  const auto& c = *f.target;
  // naturality square for m is checkable once both endpoints are assigned
  std::vector<std::vector<MorId>> checks(x.num_objects());
  for (MorId m = 0; m < x.num_morphisms(); ++m)
    if (!x.is_identity(m)) checks[std::max(x.dom(m), x.cod(m))].push_back(m);

  CapCounter counter(cap, "enumerate_nat_trans");
  std::vector<NaturalTransformation> out;
  std::vector<MorId> comp(x.num_objects(), kNoId);
  std::function<void(ObjId)> go = [&](ObjId k) {
    if (k == x.num_objects()) {
      out.push_back(NaturalTransformation{f, g, comp});
      counter.tick();
      return;
    }
    for (MorId a : c.hom(f.objects[k], g.objects[k])) {
      counter.tick();
      comp[k] = a;
      bool ok = true;
      for (MorId m : checks[k]) {
        if (c.compose(g.morphisms[m], comp[x.dom(m)]) != c.compose(comp[x.cod(m)], f.morphisms[m])) {
          ok = false;
          break;
        }
      }
      if (ok) go(k + 1);
    }
    comp[k] = kNoId;
  };
  go(0);
  return out;
}

}  // namespace catwb
