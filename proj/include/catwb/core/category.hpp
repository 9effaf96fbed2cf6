#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "catwb/core/errors.hpp"

namespace catwb {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;

inline constexpr std::uint32_t kNoId = std::numeric_limits<std::uint32_t>::max();

struct Arrow {
  std::string name;
  ObjId dom = 0;
  ObjId cod = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class CategoryBuilder;

/// A finite category given by an explicit, total composition table.
///
/// Objects and morphisms are stored sorted by their string ids, so index order
/// is the canonical (lexicographic) order and every enumeration built on top of
/// it is deterministic. Instances are immutable once built; the only way to get
/// an unlawful table is through the `with_*` mutators used by corruption tests.
class FiniteCategory {
 public:
  FiniteCategory() = default;

  std::size_t num_objects() const noexcept { return objects_.size(); }
  std::size_t num_morphisms() const noexcept { return arrows_.size(); }

  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  const std::string& object_name(ObjId x) const { return objects_.at(x); }
  const std::string& morphism_name(MorId m) const { return arrows_.at(m).name; }
  const Arrow& arrow(MorId m) const { return arrows_.at(m); }
  ObjId dom(MorId m) const { return arrows_[m].dom; }
  ObjId cod(MorId m) const { return arrows_[m].cod; }

  MorId identity(ObjId x) const { return identities_[x]; }
  bool is_identity(MorId m) const { return identities_[arrows_[m].dom] == m; }

  /// Morphisms out of `x`, grouped by codomain.
  std::span<const MorId> out(ObjId x) const { return out_[x]; }
  /// Morphisms into `x`, grouped by domain.
  std::span<const MorId> in(ObjId x) const { return in_[x]; }

  std::span<const MorId> hom(ObjId a, ObjId b) const {
    const auto& o = out_[a];
    auto lo = std::lower_bound(o.begin(), o.end(), b,
                               [&](MorId m, ObjId key) { return arrows_[m].cod < key; });
    auto hi = lo;
    while (hi != o.end() && arrows_[*hi].cod == b) ++hi;
    return {lo, hi};
  }

  /// g ∘ f. Throws if cod(f) != dom(g).
  MorId compose(MorId g, MorId f) const {
    if (arrows_[f].cod != arrows_[g].dom) {
      throw PreconditionError("compose: " + arrows_[g].name + " . " + arrows_[f].name +
                              " is not a composable pair");
    }
    return table_cell(g, f);
  }

  /// Same as `compose` but returns kNoId for non-composable pairs.
  MorId try_compose(MorId g, MorId f) const {
    if (f >= arrows_.size() || g >= arrows_.size() || arrows_[f].cod != arrows_[g].dom) return kNoId;
    return table_cell(g, f);
  }

  std::optional<ObjId> find_object(std::string_view name) const {
    auto it = std::lower_bound(objects_.begin(), objects_.end(), name,
                               [](const std::string& s, std::string_view k) { return s < k; });
    if (it == objects_.end() || *it != name) return std::nullopt;
    return static_cast<ObjId>(it - objects_.begin());
  }

  std::optional<MorId> find_morphism(std::string_view name) const {
    auto it = std::lower_bound(arrows_.begin(), arrows_.end(), name,
                               [](const Arrow& a, std::string_view k) { return a.name < k; });
    if (it == arrows_.end() || it->name != name) return std::nullopt;
    return static_cast<MorId>(it - arrows_.begin());
  }

  ObjId object(std::string_view name) const {
    if (auto x = find_object(name)) return *x;
    throw StructuralError("unknown object '" + std::string(name) + "'");
  }

  MorId morphism(std::string_view name) const {
    if (auto m = find_morphism(name)) return *m;
    throw StructuralError("unknown morphism '" + std::string(name) + "'");
  }

  bool is_thin() const {
    for (ObjId a = 0; a < num_objects(); ++a) {
      const auto& o = out_[a];
      for (std::size_t i = 1; i < o.size(); ++i)
        if (arrows_[o[i]].cod == arrows_[o[i - 1]].cod) return false;
    }
    return true;
  }

  bool is_discrete() const { return arrows_.size() == objects_.size(); }

  /// Copy with the composite g ∘ f overwritten by h (no law checks).
  FiniteCategory with_composite(MorId g, MorId f, MorId h) const {
    FiniteCategory c = *this;
    if (arrows_[f].cod != arrows_[g].dom) throw PreconditionError("with_composite: not composable");
    const ObjId y = arrows_[f].cod;
    c.table_[y][in_pos_[f] * out_[y].size() + out_pos_[g]] = h;
    return c;
  }

  /// Copy with the identity of x reassigned to m (no law checks).
  FiniteCategory with_identity(ObjId x, MorId m) const {
    FiniteCategory c = *this;
    c.identities_.at(x) = m;
    return c;
  }

  friend bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
    return a.objects_ == b.objects_ && a.arrows_ == b.arrows_ && a.identities_ == b.identities_ &&
           a.table_ == b.table_;
  }

 private:
  friend class CategoryBuilder;

  MorId table_cell(MorId g, MorId f) const {
    const ObjId y = arrows_[f].cod;
    return table_[y][in_pos_[f] * out_[y].size() + out_pos_[g]];
  }

  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<MorId> identities_;
  std::vector<std::vector<MorId>> out_;
  std::vector<std::vector<MorId>> in_;
  std::vector<std::uint32_t> out_pos_;
  std::vector<std::uint32_t> in_pos_;
  // table_[y][i * |out y| + j] = out_[y][j] ∘ in_[y][i]
  std::vector<std::vector<MorId>> table_;
};

/// Accumulates objects and morphisms under caller-chosen indices, then sorts
/// everything into canonical order. The composition is supplied either as an
/// explicit table (`set_composite`) or as a callable over builder indices.
class CategoryBuilder {
 public:
  ObjId add_object(std::string name) {
    if (!object_names_.insert(name).second) throw StructuralError("duplicate object id '" + name + "'");
    objects_.push_back(std::move(name));
    identities_.push_back(kNoId);
    return static_cast<ObjId>(objects_.size() - 1);
  }

  MorId add_morphism(std::string name, ObjId dom, ObjId cod) {
    if (dom >= objects_.size() || cod >= objects_.size())
      throw StructuralError("morphism '" + name + "' references an unknown object");
    if (!morphism_names_.insert(name).second) throw StructuralError("duplicate morphism id '" + name + "'");
    arrows_.push_back({std::move(name), dom, cod});
    return static_cast<MorId>(arrows_.size() - 1);
  }

  MorId add_identity(ObjId x) {
    MorId m = add_morphism("id_" + objects_.at(x), x, x);
    identities_[x] = m;
    return m;
  }

  void set_identity(ObjId x, MorId m) { identities_.at(x) = m; }

  void set_composite(MorId g, MorId f, MorId h) {
    if (!table_.emplace(key(g, f), h).second)
      throw StructuralError("duplicate composite for " + arrows_.at(g).name + " . " + arrows_.at(f).name);
  }

  std::size_t num_objects() const noexcept { return objects_.size(); }
  std::size_t num_morphisms() const noexcept { return arrows_.size(); }
  const Arrow& arrow(MorId m) const { return arrows_.at(m); }
  const std::string& object_name(ObjId x) const { return objects_.at(x); }
  MorId identity(ObjId x) const { return identities_.at(x); }

  /// Builds from the explicit table. Composites with an identity that were not
  /// given explicitly follow the identity laws.
  FiniteCategory build() && {
    auto table = std::move(table_);
    std::vector<char> is_id(arrows_.size(), 0);
    for (MorId m : identities_)
      if (m != kNoId) is_id[m] = 1;
    return std::move(*this).build([&](MorId g, MorId f) -> MorId {
      auto it = table.find(key(g, f));
      if (it != table.end()) return it->second;
      if (is_id[g]) return f;
      if (is_id[f]) return g;
      return kNoId;
    });
  }

  /// `compose(g, f)` receives builder indices and returns the builder index of
  /// g ∘ f, or kNoId when the composite is not defined.
  template <class Compose>
  FiniteCategory build(Compose&& compose) && {
    const std::size_t n_obj = objects_.size();
    const std::size_t n_mor = arrows_.size();

    std::vector<std::uint32_t> obj_order(n_obj), mor_order(n_mor);
    for (std::uint32_t i = 0; i < n_obj; ++i) obj_order[i] = i;
    for (std::uint32_t i = 0; i < n_mor; ++i) mor_order[i] = i;
    std::sort(obj_order.begin(), obj_order.end(),
              [&](auto a, auto b) { return objects_[a] < objects_[b]; });
    std::sort(mor_order.begin(), mor_order.end(),
              [&](auto a, auto b) { return arrows_[a].name < arrows_[b].name; });
    std::vector<std::uint32_t> new_obj(n_obj), new_mor(n_mor);
    for (std::uint32_t i = 0; i < n_obj; ++i) new_obj[obj_order[i]] = i;
    for (std::uint32_t i = 0; i < n_mor; ++i) new_mor[mor_order[i]] = i;

    FiniteCategory c;
    c.objects_.reserve(n_obj);
    for (auto old : obj_order) c.objects_.push_back(std::move(objects_[old]));
    c.arrows_.reserve(n_mor);
    for (auto old : mor_order) {
      Arrow a = std::move(arrows_[old]);
      a.dom = new_obj[a.dom];
      a.cod = new_obj[a.cod];
      c.arrows_.push_back(std::move(a));
    }
    c.identities_.resize(n_obj);
    for (std::uint32_t old = 0; old < n_obj; ++old) {
      if (identities_[old] == kNoId)
        throw StructuralError("object '" + c.objects_[new_obj[old]] + "' has no identity");
      c.identities_[new_obj[old]] = new_mor[identities_[old]];
    }

    c.out_.assign(n_obj, {});
    c.in_.assign(n_obj, {});
    for (MorId m = 0; m < n_mor; ++m) {
      c.out_[c.arrows_[m].dom].push_back(m);
      c.in_[c.arrows_[m].cod].push_back(m);
    }
    c.out_pos_.resize(n_mor);
    c.in_pos_.resize(n_mor);
    for (ObjId x = 0; x < n_obj; ++x) {
      std::stable_sort(c.out_[x].begin(), c.out_[x].end(),
                       [&](MorId a, MorId b) { return c.arrows_[a].cod < c.arrows_[b].cod; });
      std::stable_sort(c.in_[x].begin(), c.in_[x].end(),
                       [&](MorId a, MorId b) { return c.arrows_[a].dom < c.arrows_[b].dom; });
      for (std::uint32_t i = 0; i < c.out_[x].size(); ++i) c.out_pos_[c.out_[x][i]] = i;
      for (std::uint32_t i = 0; i < c.in_[x].size(); ++i) c.in_pos_[c.in_[x][i]] = i;
    }

    c.table_.assign(n_obj, {});
    for (ObjId y = 0; y < n_obj; ++y) {
      const auto& ins = c.in_[y];
      const auto& outs = c.out_[y];
      auto& row = c.table_[y];
      row.resize(ins.size() * outs.size());
      for (std::size_t i = 0; i < ins.size(); ++i) {
        const MorId f_old = mor_order[ins[i]];
        for (std::size_t j = 0; j < outs.size(); ++j) {
          const MorId g_old = mor_order[outs[j]];
          const MorId h_old = compose(g_old, f_old);
          if (h_old == kNoId || h_old >= n_mor) {
            throw StructuralError("missing composite " + c.arrows_[outs[j]].name + " . " +
                                  c.arrows_[ins[i]].name);
          }
          row[i * outs.size() + j] = new_mor[h_old];
        }
      }
    }
    return c;
  }

 private:
  static std::uint64_t key(MorId g, MorId f) { return (std::uint64_t{g} << 32) | f; }

  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<MorId> identities_;
  std::unordered_set<std::string> object_names_;
  std::unordered_set<std::string> morphism_names_;
  std::unordered_map<std::uint64_t, MorId> table_;
};

// ---------------------------------------------------------------------------
// Validation

struct LawViolation {
  std::string law;
  std::vector<std::string> witnesses;
};

struct ValidationReport {
  std::vector<LawViolation> violations;

  bool ok() const noexcept { return violations.empty(); }

  void add(std::string law, std::vector<std::string> witnesses) {
    violations.push_back({std::move(law), std::move(witnesses)});
  }

  void merge(const ValidationReport& other, const std::string& prefix = {}) {
    for (const auto& v : other.violations) violations.push_back({prefix + v.law, v.witnesses});
  }

  bool has(std::string_view law) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const LawViolation& v) { return v.law == law; });
  }

  std::string summary() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (const auto& v : violations) {
      os << v.law << ":";
      for (const auto& w : v.witnesses) os << " " << w;
      os << "\n";
    }
    return os.str();
  }
};

inline ValidationReport validate_category(const FiniteCategory& c) {
  ValidationReport r;
  const auto n_obj = static_cast<ObjId>(c.num_objects());
  const auto n_mor = static_cast<MorId>(c.num_morphisms());
  const auto& name = [&](MorId m) { return c.morphism_name(m); };

  for (ObjId x = 0; x < n_obj; ++x) {
    MorId id = c.identity(x);
    if (id >= n_mor || c.dom(id) != x || c.cod(id) != x)
      r.add("identity-typing", {c.object_name(x), id < n_mor ? name(id) : "<none>"});
  }

  // Composite typing over every composable pair.
  std::vector<char> bad_pair_seen;
  for (MorId f = 0; f < n_mor; ++f) {
    for (MorId g : c.out(c.cod(f))) {
      MorId h = c.try_compose(g, f);
      if (h >= n_mor || c.dom(h) != c.dom(f) || c.cod(h) != c.cod(g))
        r.add("composite-typing", {name(g), name(f)});
    }
  }

  for (MorId f = 0; f < n_mor; ++f) {
    MorId id_cod = c.identity(c.cod(f));
    MorId id_dom = c.identity(c.dom(f));
    if (id_cod < n_mor && c.try_compose(id_cod, f) != f) r.add("left-identity", {name(f)});
    if (id_dom < n_mor && c.try_compose(f, id_dom) != f) r.add("right-identity", {name(f)});
  }

  for (MorId f = 0; f < n_mor; ++f) {
    for (MorId g : c.out(c.cod(f))) {
      MorId gf = c.try_compose(g, f);
      for (MorId h : c.out(c.cod(g))) {
        MorId hg = c.try_compose(h, g);
        MorId lhs = gf < n_mor ? c.try_compose(h, gf) : kNoId;
        MorId rhs = hg < n_mor ? c.try_compose(hg, f) : kNoId;
        if (lhs == kNoId || rhs == kNoId) continue;  // reported as a typing violation
        if (lhs != rhs) r.add("associativity", {name(h), name(g), name(f)});
      }
    }
  }
  return r;
}

/// Morphism ids from a to b, in canonical order.
inline std::vector<std::string> hom_set(const FiniteCategory& c, std::string_view a, std::string_view b) {
  std::vector<std::string> out;
  for (MorId m : c.hom(c.object(a), c.object(b))) out.push_back(c.morphism_name(m));
  return out;
}

}  // namespace catwb
