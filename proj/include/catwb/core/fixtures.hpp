#pragma once

#include <string>
#include <vector>

#include "catwb/core/constructions.hpp"

// Small named categories used throughout the tests, the CLI demos and the docs.
namespace catwb::fixtures {

/// The walking arrow 0 → 1 with its non-identity arrow named f.
inline CatPtr two() {
  CategoryBuilder b;
  ObjId o0 = b.add_object("0"), o1 = b.add_object("1");
  MorId i0 = b.add_identity(o0), i1 = b.add_identity(o1);
  MorId f = b.add_morphism("f", o0, o1);
  b.set_composite(i0, i0, i0);
  b.set_composite(i1, i1, i1);
  b.set_composite(f, i0, f);
  b.set_composite(i1, f, f);
  return make_cat(std::move(b).build());
}

/// Parallel pair: objects a, b and arrows f, g : a → b.
inline CatPtr parallel_pair() {
  CategoryBuilder b;
  ObjId a = b.add_object("a"), o = b.add_object("b");
  MorId ia = b.add_identity(a), ib = b.add_identity(o);
  MorId f = b.add_morphism("f", a, o), g = b.add_morphism("g", a, o);
  b.set_composite(ia, ia, ia);
  b.set_composite(ib, ib, ib);
  for (MorId k : {f, g}) {
    b.set_composite(k, ia, k);
    b.set_composite(ib, k, k);
  }
  return make_cat(std::move(b).build());
}

/// Positive divisors of n ordered by divisibility.
inline CatPtr divisor_poset(unsigned n) {
  std::vector<unsigned> ds;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) ds.push_back(d);
  std::vector<std::string> names;
  for (auto d : ds) names.push_back(std::to_string(d));
  std::vector<std::vector<bool>> leq(ds.size(), std::vector<bool>(ds.size()));
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = 0; j < ds.size(); ++j) leq[i][j] = ds[j] % ds[i] == 0;
  return poset_category(names, leq);
}

inline CatPtr div12() { return divisor_poset(12); }

/// The chain 0 < 1 < ... < n-1.
inline CatPtr chain(unsigned n) {
  std::vector<std::string> names;
  for (unsigned i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) leq[i][j] = i <= j;
  return poset_category(names, leq);
}

/// The Boolean algebra 2 × 2 with elements "00", "01", "10", "11" ordered
/// componentwise.
inline CatPtr boolean_square() {
  std::vector<std::string> names{"00", "01", "10", "11"};
  std::vector<std::vector<bool>> leq(4, std::vector<bool>(4));
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j) leq[i][j] = (i & j) == i;
  // index bit order: "01" = 1, "10" = 2
  return poset_category(names, leq);
}

/// Cyclic group Z/n as a one-object category; element k is named "r<k>".
inline CatPtr cyclic_group(unsigned n) {
  std::vector<std::string> el;
  std::vector<std::vector<std::uint32_t>> mul(n, std::vector<std::uint32_t>(n));
  for (unsigned i = 0; i < n; ++i) {
    el.push_back("r" + std::to_string(i));
    for (unsigned j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  }
  return monoid_category(el, mul);
}

}  // namespace catwb::fixtures
