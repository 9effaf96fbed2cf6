#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "catwb/core/constructions.hpp"
#include "catwb/core/enumerate.hpp"
#include "catwb/kan/kan_extension.hpp"

namespace catwb::freyd {

/// λ ⊗ X for a finite set λ = {0, …, λ-1}: λ copies of X, copy k tagged "k".
struct Tensor {
  std::size_t lambda = 0;
  CatPtr base;
  Coproduct coproduct;
  Functor codiagonal;  // ∇ : λ ⊗ X → X

  const CatPtr& category() const { return coproduct.category; }
  const Functor& injection(std::size_t k) const { return coproduct.injections.at(k); }
  /// Copy index of an object of λ ⊗ X.
  std::size_t copy_of(ObjId o) const { return coproduct.object_origin.at(o).first; }
};

inline Tensor tensor_with_set(std::size_t lambda, const CatPtr& x) {
  Tensor t;
  t.lambda = lambda;
  t.base = x;
  t.coproduct = coproduct_category(std::vector<CatPtr>(lambda, x));
  t.codiagonal = cotuple(t.coproduct, std::vector<Functor>(lambda, identity_functor(x)), x);
  return t;
}

/// s ⊗ X : λ′ ⊗ X → λ ⊗ X, sending copy k to copy s(k).
inline Functor reindex(const Tensor& from, const Tensor& to, const std::vector<std::size_t>& s) {
  if (!same_category(from.base, to.base)) throw PreconditionError("reindex: tensors over different categories");
  if (s.size() != from.lambda) throw PreconditionError("reindex: index map has the wrong domain");
  std::vector<Functor> legs;
  for (auto k : s) {
    if (k >= to.lambda) throw PreconditionError("reindex: index map leaves its codomain");
    legs.push_back(to.injection(k));
  }
  return cotuple(from.coproduct, legs, to.category());
}

struct TensorCheck {
  kan::CheckStatus status = kan::CheckStatus::skipped_cap;
  std::size_t functors = 0;         // |hom(λ ⊗ X, C)|
  std::size_t tuples = 0;           // |hom(X, C)|^λ
  std::size_t transformations = 0;  // 2-cells of hom(λ ⊗ X, C) checked
  std::string failure;
};

/// The defining bijection hom(λ ⊗ X, C) ≅ [λ, hom(X, C)]: restriction along
/// the injections must be bijective on functors and on every hom-set of
/// natural transformations.
inline TensorCheck verify_tensor(const Tensor& t, const CatPtr& c, EnumerationCap cap = {}) {
  TensorCheck r;
  try {
    CapCounter counter(cap, "verify_tensor");
    auto base = enumerate_functors(t.base, c, cap);
    auto all = enumerate_functors(t.category(), c, cap);
    r.functors = all.size();
    r.tuples = 1;
    for (std::size_t k = 0; k < t.lambda; ++k) r.tuples *= base.size();

    auto restrict = [&](const Functor& f) {
      std::vector<std::vector<MorId>> key;
      for (std::size_t k = 0; k < t.lambda; ++k) {
        auto g = compose(f, t.injection(k));
        key.push_back(g.objects);
        key.push_back(g.morphisms);
      }
      return key;
    };
    std::vector<std::vector<std::vector<MorId>>> images;
    for (const auto& f : all) images.push_back(restrict(f));
    std::sort(images.begin(), images.end());
    if (r.functors != r.tuples || std::adjacent_find(images.begin(), images.end()) != images.end()) {
      r.status = kan::CheckStatus::failed;
      r.failure = "restriction is not bijective on functors";
      return r;
    }

    for (const auto& f : all)
      for (const auto& g : all) {
        counter.tick();
        auto cells = enumerate_nat_trans(f, g, cap);
        std::size_t expected = 1;
        for (std::size_t k = 0; k < t.lambda; ++k)
          expected *= enumerate_nat_trans(compose(f, t.injection(k)), compose(g, t.injection(k)), cap).size();
        std::vector<std::vector<MorId>> restricted;
        for (const auto& a : cells) {
          std::vector<MorId> key;
          for (std::size_t k = 0; k < t.lambda; ++k) {
            auto w = whisker_left(a, t.injection(k));
            key.insert(key.end(), w.components.begin(), w.components.end());
          }
          restricted.push_back(std::move(key));
        }
        std::sort(restricted.begin(), restricted.end());
        r.transformations += cells.size();
        if (cells.size() != expected || std::adjacent_find(restricted.begin(), restricted.end()) != restricted.end()) {
          r.status = kan::CheckStatus::failed;
          r.failure = "restriction is not bijective on natural transformations";
          return r;
        }
      }
    r.status = kan::CheckStatus::verified;
  } catch (const ResourceError&) {
    r.status = kan::CheckStatus::skipped_cap;
  }
  return r;
}

}  // namespace catwb::freyd
