#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "catwb/core/category.hpp"

namespace catwb {

/// Builder for categories whose morphisms are identified by (dom, cod, key),
/// with composition computed on keys. Comma categories, inserters and functor
/// categories are all built this way.
class KeyedCategoryBuilder {
 public:
  using Key = std::vector<std::uint32_t>;

  ObjId add_object(std::string name) { return inner_.add_object(std::move(name)); }

  MorId add_morphism(std::string name, ObjId dom, ObjId cod, Key key) {
    MorId m = inner_.add_morphism(std::move(name), dom, cod);
    index_.emplace(std::make_tuple(dom, cod, key), m);
    keys_.push_back(std::move(key));
    ends_.emplace_back(dom, cod);
    return m;
  }

  MorId add_identity(ObjId x, Key key) {
    MorId m = add_morphism("id_" + inner_.object_name(x), x, x, std::move(key));
    inner_.set_identity(x, m);
    return m;
  }

  MorId find(ObjId dom, ObjId cod, const Key& key) const {
    auto it = index_.find(std::make_tuple(dom, cod, key));
    return it == index_.end() ? kNoId : it->second;
  }

  const Key& key(MorId m) const { return keys_.at(m); }
  const std::string& object_name(ObjId x) const { return inner_.object_name(x); }
  std::size_t num_objects() const { return inner_.num_objects(); }
  std::size_t num_morphisms() const { return inner_.num_morphisms(); }

  /// `compose_keys(key_g, key_f)` returns the key of g ∘ f.
  template <class ComposeKeys>
  FiniteCategory build(ComposeKeys&& compose_keys) && {
    return std::move(inner_).build([&](MorId g, MorId f) -> MorId {
      return find(ends_[f].first, ends_[g].second, compose_keys(keys_[g], keys_[f]));
    });
  }

 private:
  CategoryBuilder inner_;
  std::vector<Key> keys_;
  std::vector<std::pair<ObjId, ObjId>> ends_;
  std::map<std::tuple<ObjId, ObjId, Key>, MorId> index_;
};

}  // namespace catwb
