#include <gtest/gtest.h>

#include "ndga/notation.hpp"

using namespace ndga;

namespace {

Multivector e(std::initializer_list<int> one_based, int dim = 6) {
  std::vector<int> idx;
  for (int i : one_based) idx.push_back(i - 1);
  return Multivector::monomial(dim, idx);
}

ErrorCode code_of(const std::string& s) {
  try {
    parse(s);
  } catch (const Error& err) {
    return err.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Notation, ParseExamples) {
  LieAlgebra h15 = parse("(0,0,0,12,13+42,14+23)");
  EXPECT_EQ(h15.differential(4), e({1, 3}) - e({2, 4}));
  EXPECT_EQ(h15.differential(5), e({1, 4}) + e({2, 3}));
  LieAlgebra zero = parse("(0,0,0,0,0,0)");
  for (auto& d : zero.differentials()) EXPECT_TRUE(d.is_zero());
  EXPECT_EQ(parse("(0,0,0,12,14,13+42)"), catalog_lookup("h14"));
  EXPECT_EQ(parse("( 0, 0, 0, 0, 12 , 234 )").differential(5), GR(2) * e({3, 4}));
  EXPECT_EQ(parse("(0,0,-12)", true).differential(2), -e({1, 2}, 3));
  EXPECT_EQ(parse("(0,0,312)").differential(2), GR(3) * e({1, 2}, 3));
}

TEST(Notation, ParseErrors) {
  EXPECT_EQ(code_of("(0,0,0,12,99)"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("(0,0,0,12,56)"), ErrorCode::ForwardReference);
  EXPECT_EQ(code_of("(0,0,0,0,12,16)"), ErrorCode::ForwardReference);
  EXPECT_EQ(code_of("0,0"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("(0,0,1)"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("(0,0,12"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("(0,0,12)x"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("(0,0,+12)"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("(0,0,0+12)"), ErrorCode::SyntaxError);
  try {
    parse("(0,0,0,12,1x)");
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::SyntaxError);
    EXPECT_EQ(err.position(), 10u);
  }
  EXPECT_NO_THROW(parse("(0,0,0,0,12,16)", false).dim());
  EXPECT_FALSE(parse("(0,0,0,0,12,16)", false).is_malcev());
}

TEST(Notation, Print) {
  EXPECT_EQ(print(catalog_lookup("h3")), "(0,0,0,0,0,12+34)");
  EXPECT_EQ(print(parse("(0,0,0,0,0,0)")), "(0,0,0,0,0,0)");
  EXPECT_EQ(print(catalog_lookup("h15")), "(0,0,0,12,13-24,14+23)");
  LieAlgebra frac({Multivector(3), Multivector(3), gr_q(1, 2) * e({1, 2}, 3)});
  EXPECT_THROW(print(frac), Error);
}

TEST(Notation, RoundTripOnCatalog) {
  for (auto& entry : catalog()) {
    LieAlgebra g = parse(entry.equations);
    EXPECT_TRUE(check_jacobi(g)) << entry.name;
    EXPECT_TRUE(g.is_malcev()) << entry.name;
    EXPECT_EQ(parse(print(g)), g) << entry.name;
  }
}

TEST(Notation, CatalogLookup) {
  EXPECT_EQ(print(catalog_lookup("h7")), "(0,0,0,12,13,23)");
  EXPECT_EQ(print(catalog_lookup("h17")), "(0,0,0,0,12,15)");
  EXPECT_THROW(catalog_lookup("h99"), Error);
  EXPECT_EQ(catalog().size(), 17u);
}

TEST(Notation, Classify) {
  EXPECT_EQ(classify(parse("(0,0,0,0,12,13)")), "h6");
  EXPECT_EQ(classify(parse("(0,0,0,0,0,0)")), "h1");
  for (auto& entry : catalog()) EXPECT_EQ(classify(parse(entry.equations)), entry.name);
  EXPECT_THROW(classify(parse("(0,0,12)")), Error);
}

TEST(Notation, FingerprintsSeparateCatalog) {
  const auto& t = classifier_table();
  ASSERT_EQ(t.real.size(), 17u);
  for (std::size_t i = 0; i < t.real.size(); ++i)
    for (std::size_t j = i + 1; j < t.real.size(); ++j) EXPECT_FALSE(t.real[i].first == t.real[j].first);
  // over C exactly two pairs merge
  EXPECT_EQ(t.complex.size(), 15u);
  EXPECT_EQ(complex_class("h5"), (std::vector<std::string>{"h2", "h5"}));
  EXPECT_EQ(complex_class("h15"), (std::vector<std::string>{"h13", "h15"}));
  EXPECT_EQ(complex_class("h7"), (std::vector<std::string>{"h7"}));
}
