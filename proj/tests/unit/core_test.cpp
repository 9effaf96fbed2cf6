#include <gtest/gtest.h>

#include <numeric>

#include "catwb/core/fixtures.hpp"
#include "catwb/core/functor_category.hpp"
#include "catwb/core/graph.hpp"
#include "catwb/core/isomorphism.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace catwb;

namespace {

std::vector<oracle::RawFunctor> as_raw(const std::vector<Functor>& fs) {
  std::vector<oracle::RawFunctor> out;
  for (const auto& f : fs) out.push_back({f.objects, f.morphisms});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Validate, WalkingArrowIsACategory) {
  auto two = fixtures::two();
  EXPECT_EQ(two->num_objects(), 2u);
  EXPECT_EQ(two->num_morphisms(), 3u);
  EXPECT_TRUE(validate_category(*two).ok());
}

TEST(Validate, RedirectedIdentityCompositeNamesTheArrow) {
  auto two = fixtures::two();
  MorId f = two->morphism("f");
  MorId id0 = two->morphism("id_0");
  auto bad = two->with_composite(f, id0, id0);
  auto r = validate_category(bad);
  ASSERT_FALSE(r.ok());
  ASSERT_TRUE(r.has("right-identity"));
  bool named = false;
  for (const auto& v : r.violations)
    if (v.law == "right-identity")
      named = std::find(v.witnesses.begin(), v.witnesses.end(), "f") != v.witnesses.end();
  EXPECT_TRUE(named);
}

TEST(Validate, CorruptedAssociativityCellIsReportedWithItsTriple) {
  // Z/3 beside the walking arrow: three objects. r1·r1 is moved from r2 to r1;
  // typing and identities stay intact, only associativity breaks.
  auto cp = coproduct_category({fixtures::cyclic_group(3), fixtures::two()}, {"z", "w"});
  const auto& c = *cp.category;
  ASSERT_EQ(c.num_objects(), 3u);
  MorId r1 = c.morphism("z.r1");
  auto bad = c.with_composite(r1, r1, r1);
  EXPECT_FALSE(oracle::table_is_category(bad));
  auto r = validate_category(bad);
  EXPECT_TRUE(r.has("associativity"));
  EXPECT_FALSE(r.has("left-identity"));
  EXPECT_FALSE(r.has("composite-typing"));
  for (const auto& v : r.violations) EXPECT_EQ(v.witnesses.size(), 3u);
}

TEST(Validate, StructuralErrorsAreDistinctFromLawViolations) {
  CategoryBuilder b;
  b.add_object("x");
  EXPECT_THROW(b.add_object("x"), StructuralError);
  EXPECT_THROW(b.add_morphism("f", 0, 7), StructuralError);
  CategoryBuilder b2;
  b2.add_object("x");
  EXPECT_THROW(std::move(b2).build(), StructuralError);  // no identity
}

TEST(HomSet, WalkingArrowAndParallelPair) {
  auto two = fixtures::two();
  EXPECT_EQ(hom_set(*two, "0", "1"), std::vector<std::string>{"f"});
  EXPECT_TRUE(hom_set(*two, "1", "0").empty());
  auto pp = fixtures::parallel_pair();
  EXPECT_EQ(hom_set(*pp, "a", "b"), (std::vector<std::string>{"f", "g"}));
  EXPECT_THROW(hom_set(*pp, "a", "zz"), StructuralError);
}

TEST(Build, DiscreteCategoryHasOnlyIdentities) {
  auto d = discrete_category({"x", "y"});
  EXPECT_EQ(d->num_objects(), 2u);
  EXPECT_EQ(d->num_morphisms(), 2u);
  EXPECT_TRUE(d->is_discrete());
  EXPECT_TRUE(validate_category(*d).ok());
}

TEST(Build, FunctorCategoryFromDiscreteTwoIntoTwo) {
  auto x = discrete_category({"1", "2"});
  auto two = fixtures::two();
  auto fc = functor_category(x, two);
  EXPECT_TRUE(validate_category(*fc.category).ok());
  EXPECT_EQ(fc.category->num_objects(), 4u);
  // Oracle: morphisms F ⇒ G are independent component choices.
  for (ObjId a = 0; a < fc.category->num_objects(); ++a)
    for (ObjId b = 0; b < fc.category->num_objects(); ++b) {
      const auto& F = fc.functors[a];
      const auto& G = fc.functors[b];
      std::size_t expect = 1;
      for (ObjId k = 0; k < x->num_objects(); ++k) expect *= two->hom(F.obj(k), G.obj(k)).size();
      EXPECT_EQ(fc.category->hom(a, b).size(), expect);
    }
  EXPECT_EQ(fc.category->num_morphisms(), 9u);
}

TEST(Build, CoproductOfTwoWalkingArrows) {
  auto cp = coproduct_category({fixtures::two(), fixtures::two()});
  const auto& c = *cp.category;
  EXPECT_EQ(c.num_objects(), 4u);
  EXPECT_EQ(c.num_morphisms(), 6u);
  EXPECT_TRUE(validate_category(c).ok());
  for (MorId m = 0; m < c.num_morphisms(); ++m)
    EXPECT_EQ(cp.object_origin[c.dom(m)].first, cp.object_origin[c.cod(m)].first);
}

TEST(Build, ProductAndOppositeAreValid) {
  auto d = fixtures::div12();
  auto p = product_category(d, fixtures::two());
  EXPECT_TRUE(validate_category(*p.category).ok());
  EXPECT_EQ(p.category->num_objects(), 12u);
  EXPECT_EQ(p.category->num_morphisms(), d->num_morphisms() * 3);
  EXPECT_TRUE(validate_category(*opposite(d)).ok());
}

TEST(EnumerateFunctors, FromTerminal) {
  auto fs = enumerate_functors(terminal_category(), fixtures::two());
  EXPECT_EQ(fs.size(), 2u);
}

TEST(EnumerateFunctors, WalkingArrowIntoItselfMatchesBruteForce) {
  auto two = fixtures::two();
  auto fs = enumerate_functors(two, two);
  auto expect = oracle::all_functors(*two, *two);
  EXPECT_EQ(expect.size(), 3u);
  EXPECT_EQ(as_raw(fs), expect);
}

TEST(EnumerateFunctors, ParallelPairIntoWalkingArrowMatchesBruteForce) {
  auto pp = fixtures::parallel_pair();
  auto two = fixtures::two();
  auto expect = oracle::all_functors(*pp, *two);
  // constant at 0, constant at 1, and a ↦ 0, b ↦ 1 with f, g ↦ f
  EXPECT_EQ(expect.size(), 3u);
  EXPECT_EQ(as_raw(enumerate_functors(pp, two)), expect);
}

TEST(EnumerateFunctors, DeterministicAndDuplicateFree) {
  auto d = fixtures::div12();
  auto two = fixtures::two();
  auto a = enumerate_functors(two, d);
  auto b = enumerate_functors(two, d);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(a[i] == b[i]);
  auto raw = as_raw(a);
  EXPECT_EQ(std::adjacent_find(raw.begin(), raw.end()), raw.end());
  EXPECT_EQ(a.size(), d->num_morphisms());  // functors from two = arrows
}

TEST(EnumerateFunctors, CapIsAHardError) {
  auto d = fixtures::div12();
  EXPECT_THROW(enumerate_functors(discrete_category({"a", "b", "c", "d"}), d, EnumerationCap{100}), ResourceError);
  try {
    enumerate_functors(discrete_category({"a", "b", "c", "d"}), d, EnumerationCap{100});
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.cap(), 100u);
    EXPECT_GT(e.attempted(), 100u);
  }
}

TEST(EnumerateNatTrans, IdentityOnDiscreteHasOnlyIdentity) {
  auto d = discrete_category({"p", "q", "r"});
  auto id = identity_functor(d);
  auto ts = enumerate_nat_trans(id, id);
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_TRUE(ts[0] == identity_transformation(id));
}

TEST(EnumerateNatTrans, PickingBothEndsOfParallelPair) {
  auto pp = fixtures::parallel_pair();
  auto ts = enumerate_nat_trans(object_picker(pp, pp->object("a")), object_picker(pp, pp->object("b")));
  ASSERT_EQ(ts.size(), 2u);
  EXPECT_EQ(pp->morphism_name(ts[0].at(0)), "f");
  EXPECT_EQ(pp->morphism_name(ts[1].at(0)), "g");
}

TEST(EnumerateNatTrans, ThroughCodiagonalOfThreePoints) {
  auto pp = fixtures::parallel_pair();
  auto one = terminal_category();
  auto cp = coproduct_category({one, one, one});
  auto a = object_picker(pp, pp->object("a"));
  auto b = object_picker(pp, pp->object("b"));
  auto nabla = cotuple(cp, {identity_functor(one), identity_functor(one), identity_functor(one)}, one);
  auto an = compose(a, nabla), bn = compose(b, nabla);
  auto ts = enumerate_nat_trans(an, bn);
  auto raw = oracle::all_nat_trans(*cp.category, *pp, {an.objects, an.morphisms}, {bn.objects, bn.morphisms});
  EXPECT_EQ(ts.size(), 8u);
  EXPECT_EQ(raw.size(), 8u);
}

TEST(EnumerateNatTrans, RejectsNonParallelFunctors) {
  auto two = fixtures::two();
  auto pp = fixtures::parallel_pair();
  EXPECT_THROW(enumerate_nat_trans(object_picker(two, 0), object_picker(pp, 0)), PreconditionError);
}

TEST(Isomorphism, FindsExplicitIsomorphisms) {
  auto d = fixtures::div12();
  auto op = opposite(d);
  EXPECT_FALSE(isomorphic(d, fixtures::chain(6)));
  auto iso = find_isomorphism(fixtures::boolean_square(), product_category(fixtures::two(), fixtures::two()).category);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(is_isomorphism(*iso));
  // div12 is self-dual: 12/d
  EXPECT_TRUE(isomorphic(d, op));
  EXPECT_FALSE(isomorphic(fixtures::parallel_pair(), fixtures::two()));
}

TEST(Graph, EdgesAndHoms) {
  FiniteGraph tri({"u", "v", "w"}, {{0, 1}, {1, 2}, {0, 2}});
  FiniteGraph edge({"p", "q"}, {{0, 1}});
  EXPECT_EQ(tri.num_edges(), 3u);
  EXPECT_THROW(FiniteGraph({"u"}, {{0, 0}, {0, 0}}), StructuralError);
  EXPECT_THROW(FiniteGraph({"u"}, {{0, 3}}), StructuralError);
  // proper 2-colourings of a triangle do not exist
  EXPECT_TRUE(enumerate_graph_homs(tri, edge).empty());
  // 3-colourings: 3! maps
  EXPECT_EQ(enumerate_graph_homs(tri, tri).size(), 6u);
}

// ---------------------------------------------------------------------------
// Properties

class RandomCategories : public ::testing::TestWithParam<int> {};

TEST_P(RandomCategories, GeneratedCategoriesValidate) {
  gen::Rng rng(GetParam());
  auto c = gen::concrete_category(rng, gen::uniform(rng, 1, 4), gen::uniform(rng, 1, 4), 20);
  EXPECT_TRUE(validate_category(*c).ok());
  EXPECT_TRUE(oracle::table_is_category(*c));
}

TEST_P(RandomCategories, OppositeIsAnInvolutionOnTables) {
  gen::Rng rng(GetParam() + 1000);
  auto c = gen::concrete_category(rng, gen::uniform(rng, 1, 4), gen::uniform(rng, 1, 4), 20);
  EXPECT_TRUE(*opposite(opposite(c)) == *c);
}

TEST_P(RandomCategories, FunctorEnumerationMatchesBruteForce) {
  gen::Rng rng(GetParam() + 2000);
  auto x = gen::random_poset(rng, gen::uniform(rng, 1, 3));
  auto c = gen::concrete_category(rng, 2, 2, 8);
  EXPECT_EQ(as_raw(enumerate_functors(x, c)), oracle::all_functors(*x, *c));
}

TEST_P(RandomCategories, NatTransOutOfDiscreteIsAProductOfHomSets) {
  gen::Rng rng(GetParam() + 3000);
  auto c = gen::concrete_category(rng, 3, 3, 16);
  std::vector<std::string> names;
  auto k = gen::uniform(rng, 1, 3);
  for (std::size_t i = 0; i < k; ++i) names.push_back("x" + std::to_string(i));
  auto x = discrete_category(names);
  auto fs = enumerate_functors(x, c);
  const Functor& F = fs[gen::uniform(rng, 0, fs.size() - 1)];
  const Functor& G = fs[gen::uniform(rng, 0, fs.size() - 1)];
  std::size_t expect = 1;
  for (ObjId i = 0; i < k; ++i) expect *= c->hom(F.obj(i), G.obj(i)).size();
  EXPECT_EQ(enumerate_nat_trans(F, G).size(), expect);
}

TEST_P(RandomCategories, FunctorCategoryOutOfTerminalIsIsomorphicToTarget) {
  gen::Rng rng(GetParam() + 4000);
  auto c = gen::concrete_category(rng, 3, 3, 14);
  auto fc = functor_category(terminal_category(), c);
  EXPECT_TRUE(isomorphic(fc.category, c));
}

TEST_P(RandomCategories, FunctorCategoryTurnsCoproductsIntoProducts) {
  gen::Rng rng(GetParam() + 5000);
  auto c = gen::random_poset(rng, 3, 0.5);
  auto x = gen::random_poset(rng, 2, 0.5);
  auto y = gen::random_poset(rng, 1);
  auto lhs = functor_category(coproduct_category({x, y}).category, c);
  auto rhs = product_category(functor_category(x, c).category, functor_category(y, c).category);
  EXPECT_TRUE(isomorphic(lhs.category, rhs.category));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomCategories, ::testing::Range(1, 26));
