#include <gtest/gtest.h>

#include "oddchain/oddchain.hpp"

using namespace oddchain;

TEST(ElemLiterals, RoundTrip) {
  for (const char *alg : {"Z", "Q", "Z^3", "Z_3", "Q_3", "PLPI(Q,Z,Q_2)", "BOUNDED(Z_2)", "PLPIII(Z,2Z,4Z,Z)"}) {
    Algebra A = parse_algebra(alg);
    for (const auto &e : enumerate_window(A, 2, 3, 400)) EXPECT_EQ(parse_elem(A, to_string(e)), e) << to_string(e);
  }
}

TEST(ElemLiterals, Errors) {
  auto Z2 = make_Zj(2);
  EXPECT_THROW(parse_elem(Z2, "(1, B)"), MembershipError);
  EXPECT_THROW(parse_elem(Z2, "(1, 2"), ParseError);
  EXPECT_THROW(parse_elem(Z2, "(1/2, T)"), ParseError);
  try {
    parse_elem(Z2, "(1, 2) x");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.position(), 7u);
  }
  EXPECT_EQ(parse_elem(parse_algebra("Z^2"), "<3,-1>"), Elem::leaf(IntVector{3, -1}));
}

TEST(Descriptors, ParseAndPrint) {
  EXPECT_EQ(parse_descriptor("4Z x 3Z"),
            (SubgroupDescriptor{CoordConstraint::multiples_of(4), CoordConstraint::multiples_of(3)}));
  EXPECT_EQ(parse_descriptor("1/2Z x 0 x Q"),
            (SubgroupDescriptor{CoordConstraint::multiples_of(Rational(1, 2)), CoordConstraint::zero_only(),
                                CoordConstraint::all()}));
  EXPECT_EQ(parse_descriptor("1"), SubgroupDescriptor{});
  EXPECT_THROW(parse_descriptor("-2Z"), ParseError);
  for (const char *d : {"Z", "2Z x 0", "1/3Z x * x 5Z"}) EXPECT_EQ(to_string(parse_descriptor(d)), d);
}

TEST(AlgebraExpressions, NamesAndShapes) {
  EXPECT_EQ(to_string(parse_algebra("PLPII(Z,Z)")), "PLPII(Z,Z)");
  EXPECT_EQ(parse_algebra("PLPII(Z,Z)"), make_Zj(2));
  EXPECT_EQ(to_string(parse_algebra("PLPI(Q, Z, Q_2)")), "PLPI(Q,Z,Q_2)");
  EXPECT_EQ(to_string(parse_algebra("PLPIV(Z,2Z,Z)")), "PLPIV(Z,2Z,Z)");
  EXPECT_EQ(to_string(parse_algebra("PLPIII(Z,2Z,4Z,Q)")), "PLPIII(Z,2Z,4Z,Q)");
  EXPECT_EQ(to_string(parse_algebra("BOUNDED(Z^2)")), "BOUNDED(Z^2)");
  for (const char *s : {"PLPII(Z,Z)", "PLPI(Q,Z,Q_2)", "PLPIII(Z,2Z,4Z,Z_2)", "PLPIV(Z_2,Z x 2Z,Q)", "BOUNDED(Q_3)"})
    EXPECT_EQ(parse_algebra(to_string(parse_algebra(s))), parse_algebra(s)) << s;
  EXPECT_THROW(parse_algebra("PLPII(Q,Z)"), PreconditionViolation);
  EXPECT_THROW(parse_algebra("PLPV(Z,Z)"), ParseError);
}

TEST(SpecFiles, ParseAndValidate) {
  auto s = parse_spec_text(R"({"ranks":[1,1,1],"iota":["III","IV"],"zdescs":["2Z",null],"vdescs":["4Z"]})");
  ASSERT_TRUE(s.representation);
  EXPECT_EQ(s.representation->ranks, (std::vector<int>{1, 1, 1}));
  EXPECT_FALSE(s.representation->zdescs[1].has_value());
  auto round = parse_spec_json(to_json(*s.representation));
  EXPECT_EQ(to_json(*round.representation), to_json(*s.representation));

  auto a = parse_spec_text(R"({"algebra":"Z_3"})");
  ASSERT_TRUE(a.algebra);
  EXPECT_EQ(*a.algebra, make_Zj(3));

  try {
    parse_spec_text(R"({"ranks":[1,1],"iota":["V"]})");
    FAIL();
  } catch (const ValidationError &e) {
    EXPECT_NE(std::string(e.what()).find("iota"), std::string::npos);
  }
  EXPECT_THROW(parse_spec_text(R"({"ranks":[1,1],"iota":[]})"), ValidationError);
  EXPECT_THROW(parse_spec_text(R"({"ranks":[-1]})"), ValidationError);
  EXPECT_THROW(parse_spec_text(R"({"ranks":[1,1],"iota":["III"],"zdescs":["2Q"]})"), ValidationError);
  EXPECT_THROW(parse_spec_text("{"), ValidationError);
}
