#include <gtest/gtest.h>

#include "catwb/core/fixtures.hpp"
#include "catwb/io/category_file.hpp"
#include "catwb/io/internal_file.hpp"
#include "catwb/io/satisfaction_file.hpp"
#include "generators.hpp"

using namespace catwb;
using namespace catwb::io;

namespace {

const char* kTwo =
    "# the walking arrow\n"
    "objects: 0 1\n"
    "arrow f: 0 -> 1\n";

const char* kPP =
    "objects: a b\n"
    "arrow f: a -> b\n"
    "arrow g: a -> b\n";

// Parse error location, or (0, 0) if the text parses.
std::pair<std::size_t, std::size_t> error_at(const std::string& text, std::string* message = nullptr) {
  try {
    parse_category(text);
  } catch (const ParseError& e) {
    if (message) *message = e.message();
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST(CategoryFile, ParsesFixtures) {
  EXPECT_EQ(*parse_category(kTwo), *fixtures::two());
  EXPECT_EQ(*parse_category(kPP), *fixtures::parallel_pair());
}

TEST(CategoryFile, CanonicalRoundTripIsByteIdentical) {
  for (auto c : {fixtures::two(), fixtures::parallel_pair(), fixtures::div12(), fixtures::boolean_square(),
                 fixtures::chain(4), discrete_category({"x", "y"}), initial_category()}) {
    auto text = serialize_category(*c);
    auto back = parse_category(text);
    EXPECT_EQ(*back, *c) << text;
    EXPECT_EQ(serialize_category(*back), text);
  }
}

TEST(CategoryFile, RandomCategoriesRoundTrip) {
  gen::Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto c = gen::concrete_category(rng, gen::uniform(rng, 1, 4), gen::uniform(rng, 1, 3), 20);
    auto text = serialize_category(*c);
    auto back = parse_category(text);
    EXPECT_EQ(serialize_category(*back), text);
    EXPECT_EQ(back->num_morphisms(), c->num_morphisms());
  }
}

TEST(CategoryFile, MissingCompositeNamesThePair) {
  std::string message;
  auto [line, col] = error_at(
      "objects: a b c\n"
      "arrow f: a -> b\n"
      "arrow g: b -> c\n"
      "arrow h: a -> c\n",
      &message);
  EXPECT_EQ(line, 3u);
  EXPECT_EQ(col, 1u);
  EXPECT_EQ(message, "missing composite g . f");
}

TEST(CategoryFile, LocatedErrors) {
  std::string message;
  EXPECT_EQ(error_at("objects: a\narrow f: a -> z\n", &message), (std::pair<std::size_t, std::size_t>{2, 15}));
  EXPECT_EQ(message, "unknown object 'z'");
  EXPECT_EQ(error_at("objects: a a\n", &message), (std::pair<std::size_t, std::size_t>{1, 12}));
  EXPECT_EQ(message, "duplicate object id 'a'");
  EXPECT_EQ(error_at("objects: a b\narrow f: a -> b\n  arrow f: a -> b\n", &message),
            (std::pair<std::size_t, std::size_t>{3, 9}));
  EXPECT_EQ(message, "duplicate arrow id 'f'");
  EXPECT_EQ(error_at("objects: a\nmorph f: a -> a\n", &message).first, 2u);
  EXPECT_EQ(error_at("objects: a\narrow id_x: a -> a\n").first, 2u);
  EXPECT_EQ(error_at("arrow f: a -> a\n").first, 1u);
  EXPECT_EQ(error_at("# nothing\n").first, 1u);
  EXPECT_EQ(error_at("objects: a b\narrow f: a -> b\ncompose f = f . f\n", &message).first, 3u);
  EXPECT_EQ(message, "arrows f and f are not composable");
  EXPECT_EQ(error_at("objects: a b\narrow f: a -> b\ncompose f = f . id_b\n").first, 3u);
  EXPECT_EQ(error_at("objects: a\narrow e: a -> a\ncompose e = e . e\ncompose id_a = e . e\n", &message).first, 4u);
  EXPECT_EQ(message, "duplicate composite for e . e");
  EXPECT_EQ(error_at("objects: a\narrow e: a -> a\ncompose e = e . nope\n", &message),
            (std::pair<std::size_t, std::size_t>{3, 17}));
}

TEST(CategoryFile, IdentityCompositesMayBeExplicit) {
  auto c = parse_category("objects: a b\narrow f: a -> b\ncompose f = f . id_a   # redundant\n");
  EXPECT_EQ(*c, *parse_category("objects: a b\narrow f: a -> b\n"));
}

TEST(CategoryFile, NonAssociativeTableIsRejected) {
  // e∘e = u and u∘e = e but e∘u = u: (e∘e)∘e = u∘e = e, e∘(e∘e) = e∘u = u
  std::string message;
  auto [line, col] = error_at(
      "objects: a\n"
      "arrow e: a -> a\n"
      "arrow u: a -> a\n"
      "compose u = e . e\n"
      "compose e = u . e\n"
      "compose u = e . u\n"
      "compose u = u . u\n",
      &message);
  EXPECT_GT(line, 3u);
  EXPECT_EQ(message.rfind("not a category", 0), 0u);
}

TEST(CategoryFile, UnwritableNames) {
  CategoryBuilder b;
  b.add_object("has space");
  b.add_identity(0);
  EXPECT_THROW(serialize_category(std::move(b).build()), PreconditionError);
}

TEST(FunctorFile, RoundTrip) {
  auto pp = fixtures::parallel_pair(), two = fixtures::two();
  for (const auto& f : enumerate_functors(two, pp)) {
    auto text = serialize_functor(f);
    EXPECT_EQ(parse_functor(text, two, pp), f);
  }
}

TEST(FunctorFile, Errors) {
  auto pp = fixtures::parallel_pair(), two = fixtures::two();
  EXPECT_THROW(parse_functor("object 0 -> a\n", two, pp), ParseError);
  EXPECT_THROW(parse_functor("object 0 -> b\nobject 1 -> a\narrow f -> f\n", two, pp), ParseError);
  EXPECT_THROW(parse_functor("object 0 -> q\n", two, pp), ParseError);
  EXPECT_THROW(parse_functor("object 0 -> a\nobject 0 -> a\n", two, pp), ParseError);
  auto ok = parse_functor("object 0 -> a\nobject 1 -> b\narrow f -> g\n", two, pp);
  EXPECT_EQ(pp->morphism_name(ok.mor(two->morphism("f"))), "g");
}

TEST(InternalFile, RoundTrip) {
  for (auto c : {fixtures::two(), fixtures::parallel_pair(), fixtures::div12()}) {
    auto a = internalcat::associated_category(c).internal;
    auto text = serialize_internal(a);
    auto back = parse_internal(text);
    EXPECT_EQ(back, a);
    EXPECT_EQ(serialize_internal(back), text);
  }
}

TEST(InternalFile, Errors) {
  EXPECT_THROW(parse_internal("A1: f\n"), ParseError);
  EXPECT_THROW(parse_internal("A0: a\nA1: id\ndom:\n  id a\ncod:\n  id a\n"), ParseError);  // no e
  EXPECT_THROW(parse_internal("A0: a\nA1: id\ndom:\n  id b\n"), ParseError);
  EXPECT_THROW(parse_internal("A0: a\nA1: id\nm:\n  id id id\n  id id id\n"), ParseError);
  try {
    parse_internal("A0: a\nA1: id\ndom:\n  id a\n  id a\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5u);
  }
  auto a = parse_internal("A0: a\nA1: id\ndom:\n  id a\ncod:\n  id a\ne:\n  a id\nm:\n  id id id\n");
  EXPECT_TRUE(internalcat::validate_internal(a).ok());
}

TEST(SatisfactionFile, ParsesAndRoundTrips) {
  const std::string text = "model\tp\tq\tr\nM1\t1\t1\t0\nM2\t1\t0\t1\nM3\t0\t0\t1\n";
  auto sat = parse_satisfaction(text);
  EXPECT_EQ(sat.models, (std::vector<std::string>{"M1", "M2", "M3"}));
  EXPECT_EQ(sat.format(sat.rows[1]), "{p,r}");
  EXPECT_EQ(serialize_satisfaction(sat), text);
  auto crlf = parse_satisfaction("x\tp\r\n# comment\r\n\r\nM\t1\r\n");
  EXPECT_EQ(crlf.rows, (std::vector<enriched::SentenceSet>{1}));
}

TEST(SatisfactionFile, Errors) {
  try {
    parse_satisfaction("m\tp\tq\nM1\t1\t2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 6u);
  }
  EXPECT_THROW(parse_satisfaction("m\tp\nM1\t1\t1\n"), ParseError);
  EXPECT_THROW(parse_satisfaction("m\tp\tp\n"), ParseError);
  EXPECT_THROW(parse_satisfaction("m\tp\nM\t1\nM\t0\n"), ParseError);
  EXPECT_THROW(parse_satisfaction(""), ParseError);
}

TEST(Files, MissingFile) { EXPECT_THROW(load_category("/nonexistent/x.cat"), ParseError); }
