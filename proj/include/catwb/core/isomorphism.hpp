#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <tuple>
#include <vector>

#include "catwb/core/cap.hpp"
#include "catwb/core/functor.hpp"

namespace catwb {

/// Exact isomorphism search: a backtracking search over object bijections that
/// preserve hom-set sizes, extended to morphism bijections that preserve
/// composition. Returns the isomorphism C → D if one exists.
inline std::optional<Functor> find_isomorphism(const CatPtr& c, const CatPtr& d, EnumerationCap cap = {}) {
  const auto& C = *c;
  const auto& D = *d;
  if (C.num_objects() != D.num_objects() || C.num_morphisms() != D.num_morphisms()) return std::nullopt;
  const auto n = static_cast<ObjId>(C.num_objects());

  auto signature = [](const FiniteCategory& k, ObjId x) {
    return std::make_tuple(k.out(x).size(), k.in(x).size(), k.hom(x, x).size());
  };
  CapCounter counter(cap, "find_isomorphism");

  std::vector<ObjId> phi(n, kNoId);
  std::vector<char> used_obj(n, 0);
  std::optional<Functor> result;

  // Morphism assignment, identities fixed by phi.
  std::vector<MorId> order;
  for (MorId m = 0; m < C.num_morphisms(); ++m)
    if (!C.is_identity(m)) order.push_back(m);
  std::vector<std::uint32_t> step_of(C.num_morphisms(), 0);
  for (std::uint32_t i = 0; i < order.size(); ++i) step_of[order[i]] = i + 1;
  std::vector<std::vector<std::tuple<MorId, MorId, MorId>>> checks(order.size() + 1);
  for (MorId f = 0; f < C.num_morphisms(); ++f)
    for (MorId g : C.out(C.cod(f))) {
      MorId h = C.compose(g, f);
      checks[std::max({step_of[g], step_of[f], step_of[h]})].emplace_back(g, f, h);
    }

  auto assign_morphisms = [&]() -> bool {
    std::vector<MorId> psi(C.num_morphisms(), kNoId);
    std::vector<char> used(D.num_morphisms(), 0);
    for (ObjId x = 0; x < n; ++x) {
      psi[C.identity(x)] = D.identity(phi[x]);
      used[D.identity(phi[x])] = 1;
    }
    auto holds = [&](std::uint32_t s) {
      for (auto [g, f, h] : checks[s])
        if (D.compose(psi[g], psi[f]) != psi[h]) return false;
      return true;
    };
    if (!holds(0)) return false;
    std::function<bool(std::uint32_t)> go = [&](std::uint32_t i) -> bool {
      if (i == order.size()) return true;
      MorId m = order[i];
      for (MorId cand : D.hom(phi[C.dom(m)], phi[C.cod(m)])) {
        if (used[cand]) continue;
        counter.tick();
        psi[m] = cand;
        used[cand] = 1;
        if (holds(i + 1) && go(i + 1)) return true;
        used[cand] = 0;
      }
      psi[m] = kNoId;
      return false;
    };
    if (!go(0)) return false;
    result = Functor{c, d, phi, psi};
    return true;
  };

  std::function<bool(ObjId)> go_obj = [&](ObjId x) -> bool {
    if (x == n) return assign_morphisms();
    for (ObjId y = 0; y < n; ++y) {
      if (used_obj[y] || signature(C, x) != signature(D, y)) continue;
      counter.tick();
      bool ok = true;
      for (ObjId z = 0; z < x && ok; ++z)
        ok = C.hom(z, x).size() == D.hom(phi[z], y).size() && C.hom(x, z).size() == D.hom(y, phi[z]).size();
      if (!ok) continue;
      phi[x] = y;
      used_obj[y] = 1;
      if (go_obj(x + 1)) return true;
      used_obj[y] = 0;
      phi[x] = kNoId;
    }
    return false;
  };
  go_obj(0);
  return result;
}

inline bool isomorphic(const CatPtr& c, const CatPtr& d, EnumerationCap cap = {}) {
  return find_isomorphism(c, d, cap).has_value();
}

/// Checks that F is an isomorphism of categories (bijective on objects and
/// morphisms, and a functor).
inline bool is_isomorphism(const Functor& f) {
  if (!validate_functor(f).ok()) return false;
  auto bij = [](std::vector<std::uint32_t> v, std::size_t n) {
    if (v.size() != n) return false;
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < n; ++i)
      if (v[i] != i) return false;
    return true;
  };
  return bij(f.objects, f.target->num_objects()) && bij(f.morphisms, f.target->num_morphisms());
}

}  // namespace catwb
