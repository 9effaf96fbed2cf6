#pragma once

// Brute-force reference implementations. These deliberately avoid the
// library's search code: they walk raw tables with odometers so that they can
// serve as ground truth for it.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "catwb/core/category.hpp"

namespace oracle {

using catwb::FiniteCategory;
using catwb::MorId;
using catwb::ObjId;

struct RawFunctor {
  std::vector<ObjId> obj;
  std::vector<MorId> mor;
  friend bool operator==(const RawFunctor&, const RawFunctor&) = default;
  friend auto operator<=>(const RawFunctor&, const RawFunctor&) = default;
};

// Odometer over [0, base)^n; calls f for every tuple.
inline void odometer(std::size_t n, std::size_t base, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> t(n, 0);
  if (base == 0 && n > 0) return;
  while (true) {
    f(t);
    std::size_t i = 0;
    while (i < n && ++t[i] == base) t[i++] = 0;
    if (i == n) return;
  }
}

inline bool is_functor(const FiniteCategory& x, const FiniteCategory& c, const RawFunctor& F) {
  for (MorId m = 0; m < x.num_morphisms(); ++m) {
    const auto& a = x.arrow(m);
    const auto& b = c.arrow(F.mor[m]);
    if (b.dom != F.obj[a.dom] || b.cod != F.obj[a.cod]) return false;
  }
  for (ObjId o = 0; o < x.num_objects(); ++o)
    if (F.mor[x.identity(o)] != c.identity(F.obj[o])) return false;
  for (MorId f = 0; f < x.num_morphisms(); ++f)
    for (MorId g = 0; g < x.num_morphisms(); ++g)
      if (x.arrow(f).cod == x.arrow(g).dom && F.mor[x.compose(g, f)] != c.compose(F.mor[g], F.mor[f])) return false;
  return true;
}

// Every object map times every morphism map, filtered by the functor laws.
inline std::vector<RawFunctor> all_functors(const FiniteCategory& x, const FiniteCategory& c) {
  std::vector<RawFunctor> out;
  odometer(x.num_objects(), c.num_objects(), [&](const std::vector<std::size_t>& ot) {
    odometer(x.num_morphisms(), c.num_morphisms(), [&](const std::vector<std::size_t>& mt) {
      RawFunctor F{{ot.begin(), ot.end()}, {mt.begin(), mt.end()}};
      if (is_functor(x, c, F)) out.push_back(F);
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Natural transformations F ⇒ G as component vectors, by odometer over all
// morphisms of c per object of x.
inline std::vector<std::vector<MorId>> all_nat_trans(const FiniteCategory& x, const FiniteCategory& c,
                                                     const RawFunctor& F, const RawFunctor& G) {
  std::vector<std::vector<MorId>> out;
  odometer(x.num_objects(), c.num_morphisms(), [&](const std::vector<std::size_t>& t) {
    for (ObjId o = 0; o < x.num_objects(); ++o)
      if (c.dom(t[o]) != F.obj[o] || c.cod(t[o]) != G.obj[o]) return;
    for (MorId m = 0; m < x.num_morphisms(); ++m) {
      ObjId a = x.dom(m), b = x.cod(m);
      if (c.compose(G.mor[m], t[a]) != c.compose(t[b], F.mor[m])) return;
    }
    out.emplace_back(t.begin(), t.end());
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Category laws checked straight from the table (identities, typing, unit
// laws, associativity). Returns true iff the table is a category.
inline bool table_is_category(const FiniteCategory& c) {
  const auto n = c.num_morphisms();
  auto comp = [&](MorId g, MorId f) -> std::optional<MorId> {
    MorId h = c.try_compose(g, f);
    if (h == catwb::kNoId || h >= n) return std::nullopt;
    return h;
  };
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    MorId i = c.identity(x);
    if (i >= n || c.dom(i) != x || c.cod(i) != x) return false;
  }
  for (MorId f = 0; f < n; ++f)
    for (MorId g = 0; g < n; ++g) {
      if (c.cod(f) != c.dom(g)) continue;
      auto h = comp(g, f);
      if (!h || c.dom(*h) != c.dom(f) || c.cod(*h) != c.cod(g)) return false;
    }
  for (MorId f = 0; f < n; ++f) {
    if (comp(c.identity(c.cod(f)), f) != f) return false;
    if (comp(f, c.identity(c.dom(f))) != f) return false;
  }
  for (MorId f = 0; f < n; ++f)
    for (MorId g = 0; g < n; ++g) {
      if (c.cod(f) != c.dom(g)) continue;
      for (MorId h = 0; h < n; ++h) {
        if (c.cod(g) != c.dom(h)) continue;
        if (comp(h, *comp(g, f)) != comp(*comp(h, g), f)) return false;
      }
    }
  return true;
}

// ---------------------------------------------------------------------------
// Finite posets and lattices as leq matrices.

using Leq = std::vector<std::vector<bool>>;

inline std::optional<std::size_t> meet(const Leq& leq, std::size_t a, std::size_t b) {
  const auto n = leq.size();
  std::optional<std::size_t> best;
  for (std::size_t c = 0; c < n; ++c) {
    if (!leq[c][a] || !leq[c][b]) continue;
    bool greatest = true;
    for (std::size_t d = 0; d < n; ++d)
      if (leq[d][a] && leq[d][b] && !leq[d][c]) greatest = false;
    if (greatest) best = c;
  }
  return best;
}

inline std::optional<std::size_t> join(const Leq& leq, std::size_t a, std::size_t b) {
  const auto n = leq.size();
  std::optional<std::size_t> best;
  for (std::size_t c = 0; c < n; ++c) {
    if (!leq[a][c] || !leq[b][c]) continue;
    bool least = true;
    for (std::size_t d = 0; d < n; ++d)
      if (leq[a][d] && leq[b][d] && !leq[c][d]) least = false;
    if (least) best = c;
  }
  return best;
}

inline bool is_lattice(const Leq& leq) {
  for (std::size_t a = 0; a < leq.size(); ++a)
    for (std::size_t b = 0; b < leq.size(); ++b)
      if (!meet(leq, a, b) || !join(leq, a, b)) return false;
  return true;
}

inline bool is_distributive(const Leq& leq) {
  const auto n = leq.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (*meet(leq, a, *join(leq, b, c)) != *join(leq, *meet(leq, a, b), *meet(leq, a, c))) return false;
  return true;
}

// Relative pseudocomplement a ⇒ b = greatest c with c ∧ a ≤ b.
inline std::optional<std::size_t> implication(const Leq& leq, std::size_t a, std::size_t b) {
  const auto n = leq.size();
  std::optional<std::size_t> best;
  for (std::size_t c = 0; c < n; ++c) {
    if (!leq[*meet(leq, c, a)][b]) continue;
    bool greatest = true;
    for (std::size_t d = 0; d < n; ++d)
      if (leq[*meet(leq, d, a)][b] && !leq[d][c]) greatest = false;
    if (greatest) best = c;
  }
  return best;
}

// Canonical form of a poset under relabelling (smallest adjacency bitstring
// over all permutations). Only used for n ≤ 8.
inline std::vector<bool> canonical_form(const Leq& leq) {
  const auto n = leq.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    code.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) code.push_back(leq[perm[i]][perm[j]]);
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// All lattices with exactly n elements, up to isomorphism. Element 0 is the
// bottom and n-1 the top; middle elements are naturally labelled, each new one
// receiving an order ideal of the earlier ones as its strict down-set.
inline std::vector<Leq> lattices(std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {Leq{{true}}};
  const std::size_t m = n - 2;
  std::vector<Leq> out;
  std::vector<std::vector<bool>> seen;
  Leq mid(m, std::vector<bool>(m, false));
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == m) {
      Leq leq(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) {
        leq[0][i] = true;
        leq[i][n - 1] = true;
      }
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) leq[i + 1][j + 1] = mid[i][j];
      if (!is_lattice(leq)) return;
      // Relabel only the middle: bottom and top are fixed by every iso.
      Leq inner(m, std::vector<bool>(m));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) inner[i][j] = mid[i][j];
      auto code = canonical_form(inner);
      if (std::find(seen.begin(), seen.end(), code) != seen.end()) return;
      seen.push_back(code);
      out.push_back(leq);
      return;
    }
    // choose the strict down-set D ⊆ {0..k-1} of k, downward closed
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      bool ideal = true;
      for (std::size_t i = 0; i < k && ideal; ++i)
        if (mask >> i & 1)
          for (std::size_t j = 0; j < k; ++j)
            if (mid[j][i] && !(mask >> j & 1)) ideal = false;
      if (!ideal) continue;
      for (std::size_t i = 0; i < k; ++i) mid[i][k] = (mask >> i & 1) != 0;
      mid[k][k] = true;
      go(k + 1);
      for (std::size_t i = 0; i < k; ++i) mid[i][k] = false;
      mid[k][k] = false;
    }
  };
  go(0);
  return out;
}

}  // namespace oracle
