#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catwb/core/constructions.hpp"
#include "catwb/kan/adjoint.hpp"

namespace catwb::enriched {

/// A finite partial order; leq[i][j] means i ≤ j.
struct FinitePoset {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq;

  std::size_t size() const { return names.size(); }
  bool le(std::size_t i, std::size_t j) const { return leq[i][j]; }

  /// Greatest lower bound of a subset (top for the empty subset), if any.
  std::optional<std::size_t> meet(const std::vector<std::size_t>& xs) const {
    return bound(xs, true);
  }
  /// Least upper bound (bottom for the empty subset), if any.
  std::optional<std::size_t> join(const std::vector<std::size_t>& xs) const {
    return bound(xs, false);
  }

 private:
  std::optional<std::size_t> bound(const std::vector<std::size_t>& xs, bool lower) const {
    auto below = [&](std::size_t a, std::size_t b) { return lower ? le(a, b) : le(b, a); };
    std::vector<std::size_t> bounds;
    for (std::size_t c = 0; c < size(); ++c) {
      bool ok = true;
      for (auto x : xs) ok = ok && below(c, x);
      if (ok) bounds.push_back(c);
    }
    for (auto c : bounds) {
      bool best = true;
      for (auto d : bounds) best = best && below(d, c);
      if (best) return c;
    }
    return std::nullopt;
  }
};

/// Throws unless leq is reflexive, transitive and antisymmetric.
inline void validate_poset(const FinitePoset& p) {
  const auto n = p.size();
  if (p.leq.size() != n) throw StructuralError("poset: order matrix has the wrong size");
  for (const auto& row : p.leq)
    if (row.size() != n) throw StructuralError("poset: order matrix has the wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.le(i, i)) throw StructuralError("poset: not reflexive at " + p.names[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && p.le(i, j) && p.le(j, i))
        throw StructuralError("poset: not antisymmetric at " + p.names[i] + ", " + p.names[j]);
      for (std::size_t k = 0; k < n; ++k)
        if (p.le(i, j) && p.le(j, k) && !p.le(i, k)) throw StructuralError("poset: not transitive at " + p.names[i]);
    }
  }
}

/// Quotient of a preorder by its equivalence i ≤ j ≤ i. Classes are named
/// by their first member and listed in order of first appearance.
struct PosetQuotient {
  FinitePoset poset;
  std::vector<std::size_t> class_of;
  std::vector<std::vector<std::size_t>> classes;
};

inline PosetQuotient quotient_preorder(const std::vector<std::string>& names,
                                       const std::vector<std::vector<bool>>& leq) {
  const auto n = names.size();
  PosetQuotient q;
  q.class_of.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i][i]) throw StructuralError("preorder: not reflexive at " + names[i]);
    if (q.class_of[i] != n) continue;
    q.class_of[i] = q.classes.size();
    q.classes.push_back({i});
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i][j] && leq[j][i]) {
        q.class_of[j] = q.class_of[i];
        q.classes.back().push_back(j);
      }
  }
  const auto m = q.classes.size();
  q.poset.leq.assign(m, std::vector<bool>(m));
  for (const auto& c : q.classes) q.poset.names.push_back(names[c[0]]);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) q.poset.leq[a][b] = leq[q.classes[a][0]][q.classes[b][0]];
  validate_poset(q.poset);
  return q;
}

struct MonotoneMap {
  FinitePoset source;
  FinitePoset target;
  std::vector<std::size_t> values;

  std::size_t operator()(std::size_t x) const { return values[x]; }
};

inline bool is_monotone(const MonotoneMap& f) {
  if (f.values.size() != f.source.size()) return false;
  for (auto v : f.values)
    if (v >= f.target.size()) return false;
  for (std::size_t i = 0; i < f.source.size(); ++i)
    for (std::size_t j = 0; j < f.source.size(); ++j)
      if (f.source.le(i, j) && !f.target.le(f.values[i], f.values[j])) return false;
  return true;
}

/// Kan extension of τ : X → A along s : X → Y between posets:
/// right R y = ⋀ {τ x : y ≤ s x}, left L y = ⋁ {τ x : s x ≤ y}.
/// None when a required meet or join is missing.
inline std::optional<MonotoneMap> poset_kan(const MonotoneMap& tau, const MonotoneMap& s, kan::Side side) {
  if (!is_monotone(tau) || !is_monotone(s)) throw PreconditionError("poset_kan: maps must be monotone");
  if (tau.source.names != s.source.names || tau.source.leq != s.source.leq)
    throw PreconditionError("poset_kan: tau and s have different sources");
  const bool right = side == kan::Side::right;
  MonotoneMap out{s.target, tau.target, {}};
  for (std::size_t y = 0; y < s.target.size(); ++y) {
    std::vector<std::size_t> xs;
    for (std::size_t x = 0; x < s.source.size(); ++x)
      if (right ? s.target.le(y, s(x)) : s.target.le(s(x), y)) xs.push_back(tau(x));
    auto v = right ? tau.target.meet(xs) : tau.target.join(xs);
    if (!v) return std::nullopt;
    out.values.push_back(*v);
  }
  return out;
}

inline MonotoneMap identity_map(const FinitePoset& p) {
  MonotoneMap f{p, p, {}};
  for (std::size_t i = 0; i < p.size(); ++i) f.values.push_back(i);
  return f;
}

/// The poset as a thin category (names kept, so ids follow sorted names).
inline CatPtr as_category(const FinitePoset& p) { return poset_category(p.names, p.leq); }

/// The monotone map as a functor between the thin categories.
inline Functor as_functor(const MonotoneMap& f, const CatPtr& source, const CatPtr& target) {
  const auto& S = *source;
  const auto& T = *target;
  Functor out{source, target, {}, {}};
  std::vector<std::size_t> index(S.num_objects());
  for (std::size_t i = 0; i < f.source.size(); ++i) index[S.object(f.source.names[i])] = i;
  for (ObjId o = 0; o < S.num_objects(); ++o) out.objects.push_back(T.object(f.target.names[f(index[o])]));
  for (MorId m = 0; m < S.num_morphisms(); ++m) {
    auto h = T.hom(out.objects[S.dom(m)], out.objects[S.cod(m)]);
    if (h.empty()) throw PreconditionError("as_functor: map is not monotone");
    out.morphisms.push_back(h[0]);
  }
  return out;
}

}  // namespace catwb::enriched
