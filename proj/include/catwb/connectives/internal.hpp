#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catwb/connectives/discreteness.hpp"
#include "catwb/kan/adjoint.hpp"

namespace catwb::connectives {

using kan::Adjunction;

/// One connective: either a validated adjunction witness or a reason for its
/// absence (the first object without a universal arrow, or a failed
/// precondition).
struct ConnectiveEntry {
  std::string name;
  bool exists = false;
  std::optional<Adjunction> witness;
  std::string absence;
};

inline ConnectiveEntry entry_from_search(std::string name, const kan::AdjointSearch& s, const FiniteCategory& codomain,
                                         const std::string& what) {
  ConnectiveEntry e{std::move(name), s.adjunction.has_value(), s.adjunction, {}};
  if (!e.exists) e.absence = "no " + what + " at " + codomain.object_name(s.obstruction);
  return e;
}

/// Terminal, initial, binary products and coproducts of A, each as an
/// adjoint of ! : A → 1 or Δ : A → A × A.
struct ConnectiveReport {
  CatPtr category;
  Product square;  // A × A
  Functor bang;
  Functor delta;
  ConnectiveEntry terminal, initial, products, coproducts;

  ObjId top() const { return terminal.witness->right.obj(0); }
  ObjId bottom() const { return initial.witness->left.obj(0); }
  ObjId meet(ObjId a, ObjId b) const { return products.witness->right.obj(square.object(a, b)); }
  ObjId join(ObjId a, ObjId b) const { return coproducts.witness->left.obj(square.object(a, b)); }
  bool cartesian() const { return terminal.exists && products.exists; }
  bool cocartesian() const { return initial.exists && coproducts.exists; }
};

inline ConnectiveReport internal_connectives(const CatPtr& a, EnumerationCap cap = {}) {
  ConnectiveReport r;
  r.category = a;
  r.square = product_category(a, a);
  r.bang = terminal_functor(a);
  r.delta = diagonal(r.square);
  const auto& one = *r.bang.target;
  r.terminal = entry_from_search("terminal", kan::search_adjoint(r.bang, kan::Side::right, cap), one, "terminal object");
  r.initial = entry_from_search("initial", kan::search_adjoint(r.bang, kan::Side::left, cap), one, "initial object");
  r.products = entry_from_search("products", kan::search_adjoint(r.delta, kan::Side::right, cap), *r.square.category,
                                 "product");
  r.coproducts = entry_from_search("coproducts", kan::search_adjoint(r.delta, kan::Side::left, cap),
                                   *r.square.category, "coproduct");
  return r;
}

// ---------------------------------------------------------------------------
// Closedness relative to a bifunctor r : A × A → A.

/// Which argument of r is held fixed: left means r(−, x), right r(x, −).
enum class ClosedSide { left, right };

struct RClosedReport {
  ConnectiveEntry entry;
  Product domain;   // A × J
  Functor twist;    // (a, x) ↦ (r(a, j x), x) or (r(j x, a), x)
  Functor j;        // J → A, ε_A by default
  std::vector<ConnectiveEntry> pointwise;  // r(−, j x) per object x of J
  bool agree = false;                      // internal verdict == all pointwise verdicts
};

/// r(−, c) or r(c, −) as an endofunctor of A.
inline Functor section(const Product& aa, const Functor& r, ClosedSide side, ObjId c) {
  const auto& A = *aa.left;
  Functor s{aa.left, aa.left, {}, {}};
  const MorId ic = A.identity(c);
  for (ObjId x = 0; x < A.num_objects(); ++x)
    s.objects.push_back(r.obj(side == ClosedSide::left ? aa.object(x, c) : aa.object(c, x)));
  for (MorId f = 0; f < A.num_morphisms(); ++f)
    s.morphisms.push_back(r.mor(side == ClosedSide::left ? aa.morphism(f, ic) : aa.morphism(ic, f)));
  return s;
}

/// Builds ⟨r∘(id×j), π_J⟩ on A × J (or the mirrored twist) and searches its
/// right adjoint; cross-checks against right adjoints of each r(−, j x).
inline RClosedReport r_closed(const Product& aa, const Functor& r, ClosedSide side, std::optional<Functor> j = {},
                              EnumerationCap cap = {}) {
  if (!same_category(aa.left, aa.right)) throw PreconditionError("r_closed: expected a square A × A");
  if (!same_category(r.source, aa.category) || !same_category(r.target, aa.left))
    throw PreconditionError("r_closed: r must be a functor A × A → A");
  const auto& a = aa.left;
  RClosedReport out;
  out.j = j ? *j : discreteness_instance(AmbientKind::categories).counit(a);
  if (!same_category(out.j.target, a)) throw PreconditionError("r_closed: j must land in A");
  out.domain = product_category(a, out.j.source);
  const auto& A = *a;
  const auto& J = *out.j.source;
  const auto& d = out.domain;

  out.twist = Functor{d.category, d.category, {}, {}};
  auto r_at = [&](ObjId x, ObjId c) { return side == ClosedSide::left ? aa.object(x, c) : aa.object(c, x); };
  auto r_mor = [&](MorId f, MorId g) { return side == ClosedSide::left ? aa.morphism(f, g) : aa.morphism(g, f); };
  for (ObjId o = 0; o < d.category->num_objects(); ++o) {
    auto [x, k] = d.object_components[o];
    out.twist.objects.push_back(d.object(r.obj(r_at(x, out.j.obj(k))), k));
  }
  for (MorId m = 0; m < d.category->num_morphisms(); ++m) {
    auto [f, u] = d.morphism_components[m];
    out.twist.morphisms.push_back(d.morphism(r.mor(r_mor(f, out.j.mor(u))), u));
  }

  out.entry = entry_from_search("r-closed", kan::search_adjoint(out.twist, kan::Side::right, cap), *d.category,
                                "universal arrow");
  bool all = true;
  for (ObjId k = 0; k < J.num_objects(); ++k) {
    auto s = section(aa, r, side, out.j.obj(k));
    auto e = entry_from_search("r-closed at " + J.object_name(k), kan::search_adjoint(s, kan::Side::right, cap), A,
                               "universal arrow");
    all = all && e.exists;
    out.pointwise.push_back(std::move(e));
  }
  out.agree = all == out.entry.exists;
  return out;
}

// ---------------------------------------------------------------------------
// Cartesian closedness

struct CccReport {
  ConnectiveReport connectives;
  ConnectiveEntry entry;
  std::optional<RClosedReport> closed;  // absent when A lacks products
  std::vector<std::vector<ObjId>> exponents;  // exponents[x][b] = b^x

  ObjId exponent(ObjId b, ObjId x) const { return exponents.at(x).at(b); }

  /// (−)^x : A → A, read off the right adjoint on the fiber over x.
  Functor exponent_functor(ObjId x) const {
    const auto& d = closed->domain;
    const auto& R = closed->entry.witness->right;
    const auto& A = *connectives.category;
    Functor e{connectives.category, connectives.category, {}, {}};
    const MorId ix = d.right->identity(x);
    for (ObjId b = 0; b < A.num_objects(); ++b) e.objects.push_back(exponent(b, x));
    for (MorId g = 0; g < A.num_morphisms(); ++g)
      e.morphisms.push_back(d.morphism_components[R.mor(d.morphism(g, ix))].first);
    return e;
  }
};

/// A is internally cartesian closed iff it has internal products and
/// (a, x) ↦ (a ⊓ x, x) on A × |A| has a right adjoint.
inline CccReport internal_ccc(ConnectiveReport conn, EnumerationCap cap = {}) {
  CccReport out;
  out.connectives = std::move(conn);
  out.entry.name = "ccc";
  if (!out.connectives.products.exists) {
    out.entry.absence = "no internal products";
    return out;
  }
  const auto& a = out.connectives.category;
  out.closed = r_closed(out.connectives.square, out.connectives.products.witness->right, ClosedSide::left, {}, cap);
  out.entry.exists = out.closed->entry.exists;
  out.entry.witness = out.closed->entry.witness;
  out.entry.absence = out.closed->entry.absence;
  if (!out.entry.exists) return out;

  const auto& d = out.closed->domain;
  const auto& R = out.entry.witness->right;
  const auto n = a->num_objects();
  out.exponents.assign(n, std::vector<ObjId>(n));
  for (ObjId x = 0; x < n; ++x)
    for (ObjId b = 0; b < n; ++b) {
      auto [e, y] = d.object_components[R.obj(d.object(b, x))];
      if (y != x) throw InternalInconsistency("internal_ccc: right adjoint leaves the fiber over " + a->object_name(x));
      out.exponents[x][b] = e;
    }
  return out;
}

inline CccReport internal_ccc(const CatPtr& a, EnumerationCap cap = {}) {
  return internal_ccc(internal_connectives(a, cap), cap);
}

/// Per global element x : 1 → A, whether (−) ⊓ x has a right adjoint.
struct NaiveCccReport {
  ConnectiveEntry entry;
  std::vector<ConnectiveEntry> elements;
};

inline NaiveCccReport naive_ccc(const ConnectiveReport& conn, EnumerationCap cap = {}) {
  NaiveCccReport out;
  out.entry.name = "naive-ccc";
  if (!conn.products.exists) {
    out.entry.absence = "no internal products";
    return out;
  }
  const auto& A = *conn.category;
  out.entry.exists = true;
  for (ObjId x = 0; x < A.num_objects(); ++x) {
    auto s = section(conn.square, conn.products.witness->right, ClosedSide::left, x);
    auto e = entry_from_search("exponentiable " + A.object_name(x), kan::search_adjoint(s, kan::Side::right, cap), A,
                               "universal arrow");
    if (!e.exists && out.entry.exists) {
      out.entry.exists = false;
      out.entry.absence = "(-) x " + A.object_name(x) + " has no right adjoint";
    }
    out.elements.push_back(std::move(e));
  }
  return out;
}

inline NaiveCccReport naive_ccc(const CatPtr& a, EnumerationCap cap = {}) {
  return naive_ccc(internal_connectives(a, cap), cap);
}

}  // namespace catwb::connectives
