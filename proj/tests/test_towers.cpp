#include <gtest/gtest.h>

#include "oddchain/oddchain.hpp"
#include "oracles.hpp"

using namespace oddchain;

namespace {
Algebra Z() { return Algebra::base(GroupChain::zlex(1)); }
Algebra Q() { return Algebra::base(GroupChain::rationals()); }
RepresentationSpec spec(const char *json) { return *parse_spec_text(json).representation; }
Elem el(const Algebra &A, const char *s) { return parse_elem(A, s); }
} // namespace

TEST(Zj, Shapes) {
  EXPECT_EQ(make_Zj(1), Z());
  auto Z2 = make_Zj(2);
  EXPECT_TRUE(contains(Z2, el(Z2, "(4, T)")));
  EXPECT_TRUE(contains(Z2, el(Z2, "(4, -2)")));
  EXPECT_FALSE(contains(Z2, Elem::pair_bot(Elem::leaf(GroupElem::integer(4)))));
  auto Z3 = make_Zj(3);
  EXPECT_EQ(Z3.gr_kinds().size(), 3u);
  EXPECT_EQ(to_string(Z3.gr_desc(), &Z3.gr_kinds()), "Z x Z x Z");
  EXPECT_EQ(to_string(make_Qj(3).gr_desc(), &make_Qj(3).gr_kinds()), "Z x Z x Q");
  EXPECT_THROW(make_Zj(0), ValidationError);
}

TEST(Representation, TypeTwoStages) {
  auto t = build_representation(spec(R"({"ranks":[1,1],"iota":["IV"]})"), TowerMode::I_II);
  ASSERT_EQ(t.stages.size(), 2u);
  EXPECT_EQ(t.stages[0], Z());
  EXPECT_EQ(t.stages[1], make_Zj(2));
}

TEST(Representation, TypeOneCarrier) {
  auto t = build_representation(spec(R"({"ranks":[1,1],"iota":["III"]})"), TowerMode::I_II);
  const auto &A = t.stages[1];
  EXPECT_EQ(to_string(A), "PLPI(Z,Z,Z)");
  for (const char *s : {"(3, 4)", "(3, T)", "(3, B)"}) EXPECT_TRUE(contains(A, el(A, s)));
}

TEST(Representation, DenseFirstStageCannotFeedTypeFour) {
  try {
    build_representation(spec(R"({"ranks":[1,2],"iota":["IV"],"groups":["Q","Z"]})"), TowerMode::III_IV);
    FAIL();
  } catch (const PreconditionViolation &e) {
    EXPECT_EQ(e.clause(), "group part not discretely embedded");
    EXPECT_NE(std::string(e.what()).find("stage 2"), std::string::npos);
  }
}

TEST(Representation, DefaultsAndResolution) {
  auto t = build_representation(
      spec(R"({"ranks":[1,1,1],"iota":["III","IV"],"zdescs":["2Z","4Z x Z"],"vdescs":["4Z","4Z x 3Z"]})"),
      TowerMode::III_IV);
  EXPECT_EQ(to_string(t.stages[1]), "PLPIII(Z,2Z,4Z,Z)");
  EXPECT_EQ(to_string(t.stages[2]), "PLPIV(PLPIII(Z,2Z,4Z,Z),4Z x 3Z,Z)");
  auto i2 = build_representation(
      spec(R"({"ranks":[1,1,1],"iota":["III","IV"],"zdescs":["2Z","4Z x Z"],"vdescs":["4Z","4Z x 3Z"]})"),
      TowerMode::I_II);
  EXPECT_EQ(to_string(i2.stages[2]), "PLPII(PLPI(Z,2Z,Z),Z)");
  // a type IV step needs Z to be the whole group part
  EXPECT_THROW(build_representation(spec(R"({"ranks":[1,1],"iota":["IV"],"zdescs":["2Z"]})"), TowerMode::III_IV),
               PreconditionViolation);
  // Z must sit inside the previous group part
  EXPECT_THROW(build_representation(spec(R"({"ranks":[1,1,1],"iota":["III","III"],"zdescs":["2Z","Z x Z"]})"),
                                    TowerMode::III_IV),
               PreconditionViolation);
}

TEST(StandardTarget, Rows) {
  auto a = build_standard_target(spec(R"({"ranks":[1,2],"iota":["III"]})"));
  EXPECT_EQ(a.stages[0], Q());
  EXPECT_EQ(to_string(a.stages[1]), "PLPI(Q,Z,Q_2)");
  auto g = Elem::leaf(IntVector{2, -1});
  EXPECT_EQ(a.embed_group(2, g), el(make_Qj(2), "(2, -1)"));

  auto b = build_standard_target(spec(R"({"ranks":[1,1],"iota":["IV"]})"));
  EXPECT_EQ(b.stages[0], Z());
  EXPECT_EQ(to_string(b.stages[1]), "PLPII(Z,Q)");

  auto c = build_standard_target(spec(R"({"ranks":[1,1,1],"iota":["IV","IV"]})"));
  EXPECT_EQ(to_string(c.stages[2]), "PLPII(PLPII(Z,Z),Q)");
  EXPECT_EQ(to_string(c.fused.algebra), "PLPII(Z,PLPII(Z,Q))");
}

TEST(StandardTarget, EmbeddingsAreHomomorphisms) {
  VerifyOptions o;
  o.samples = 1000;
  for (const char *s : {R"({"ranks":[1,2],"iota":["III"]})", R"({"ranks":[2,1,1],"iota":["IV","III"]})",
                        R"({"ranks":[1,0,2],"iota":["IV","III"]})", R"({"ranks":[1,1,1,1],"iota":["IV","IV","IV"]})"}) {
    for (const auto &r : check_tower_maps(spec(s), o)) EXPECT_TRUE(r.ok()) << s << " " << r.name;
  }
}

TEST(Representation, TypeFourAfterTrivialStage) {
  // a trivial G_{i-1} leaves (h, 1) without an upper cover in the group part
  try {
    build_representation(spec(R"({"ranks":[1,0,2],"iota":["III","IV"]})"), TowerMode::III_IV);
    FAIL();
  } catch (const PreconditionViolation &e) {
    EXPECT_EQ(e.clause(), "group part not discretely embedded");
    EXPECT_NE(std::string(e.what()).find("stage 3"), std::string::npos);
  }
}

TEST(Fusion, CarrierCorrespondence) {
  auto f = fuse_type2_iso(Z(), Z(), Z());
  EXPECT_EQ(f.to_right(el(f.left, "((1, T), T)")), el(f.right, "(1, T)"));
  EXPECT_EQ(f.to_right(el(f.left, "((0, 2), 3)")), el(f.right, "(0, (2, 3))"));
  EXPECT_EQ(f.to_right(el(f.left, "((0, 2), T)")), el(f.right, "(0, (2, T))"));
  EXPECT_EQ(f.to_right(f.left.unit()), f.right.unit());
  for (const auto &e : enumerate_window(f.left, 2)) EXPECT_EQ(f.to_left(f.to_right(e)), e);
  EXPECT_THROW(fuse_type2_iso(Q(), Z(), Z()), PreconditionViolation);
}

TEST(Fusion, TypeTwoOverDenseMiddle) {
  // PLPII(Q, Z) is ill-defined on both sides
  EXPECT_THROW(fuse_type2_iso(Z(), Q(), Z()), PreconditionViolation);
}

TEST(Zjk, Flattening) {
  auto src = plp_II(Z(), Z());
  EXPECT_EQ(zjk_iso(1, 1, el(src, "(3, T)")), el(make_Zj(2), "(3, T)"));
  EXPECT_EQ(zjk_iso(1, 1, el(src, "(3, 5)")), el(make_Zj(2), "(3, 5)"));
  auto s21 = plp_II(make_Zj(2), Z());
  EXPECT_EQ(zjk_iso(2, 1, s21.unit()), make_Zj(3).unit());
  EXPECT_EQ(zjk_iso(2, 1, el(s21, "((1, T), T)")), el(make_Zj(3), "(1, T)"));
  EXPECT_EQ(zjk_iso(2, 1, el(s21, "((1, 2), T)")), el(make_Zj(3), "(1, (2, T))"));
  EXPECT_EQ(zjk_iso(2, 1, el(s21, "((1, 2), 3)")), el(make_Zj(3), "(1, (2, 3))"));
  for (const auto &e : enumerate_window(s21, 2)) EXPECT_EQ(zjk_iso_inverse(2, 1, zjk_iso(2, 1, e)), e);
}

TEST(Between, Witnesses) {
  auto Q2 = make_Qj(2);
  EXPECT_EQ(between(Q2, el(Q2, "(0, 3)"), el(Q2, "(0, T)")), el(Q2, "(0, 4)"));
  EXPECT_EQ(between(Q2, el(Q2, "(1/2, B)"), el(Q2, "(3/4, B)")), el(Q2, "(5/8, B)"));
  EXPECT_THROW(between(Z(), el(Z(), "0"), el(Z(), "1")), NotDense);
  EXPECT_THROW(between(Z(), el(Z(), "0"), el(Z(), "5")), NotDense);
  EXPECT_THROW(between(Q2, el(Q2, "(0, T)"), el(Q2, "(0, 3)")), ValidationError);
}

TEST(Between, AllWindowPairsInDenseAlgebras) {
  for (const auto &A : {make_Qj(2), make_Qj(3), parse_algebra("PLPI(Q,Z,Q_2)"), adjoin_bounds(make_Qj(2)),
                        parse_algebra("PLPII(Z,Q)")}) {
    ASSERT_TRUE(A.dense()) << to_string(A);
    auto w = enumerate_window(A, 1, 3, 300);
    for (const auto &a : w)
      for (const auto &b : w) {
        if (!less(A, a, b)) continue;
        Elem z = between(A, a, b);
        EXPECT_TRUE(less(A, a, z) && less(A, z, b)) << to_string(a) << " < " << to_string(z) << " < " << to_string(b);
      }
  }
}

TEST(Between, DensityFlagMatchesWindowCovers) {
  // an algebra flagged non-dense must exhibit a covering pair near the unit
  for (const char *s : {"Z", "Z_2", "PLPI(Q,Z,Z)", "PLPIII(Q,Z,2Z,Q)", "PLPI(Z,Z,Q)", "BOUNDED(Z_2)",
                        "PLPI(Q,Z,1)"}) {
    Algebra A = parse_algebra(s);
    ASSERT_FALSE(A.dense()) << s;
    auto w = enumerate_window(A, 2, 3, 2000);
    bool found = false;
    for (const auto &a : w) {
      for (const auto &b : w)
        if (less(A, a, b) && !detail::try_between(A, a, b)) {
          found = true;
          break;
        }
      if (found) break;
    }
    EXPECT_TRUE(found) << s;
  }
}

TEST(Closure, TauCounts) {
  auto Z2 = make_Zj(2);
  auto g1 = el(Z2, "(0, 1)"), g2 = el(Z2, "(1, T)");
  EXPECT_EQ(closure_tau_count(Z2, {g1}, 4).distinct_tau(), 1u);
  auto r2 = closure_tau_count(Z2, {g2}, 4);
  ASSERT_EQ(r2.distinct_tau(), 1u);
  EXPECT_EQ(r2.tau_values[0], el(Z2, "(0, T)"));
  EXPECT_EQ(closure_tau_count(Z2, {g1, g2}, 4).distinct_tau(), 2u);
}

TEST(Closure, MatchesNaiveOracle) {
  auto Z2 = make_Zj(2);
  std::vector<Elem> gens{el(Z2, "(0, 1)"), el(Z2, "(1, T)")};
  for (int depth = 0; depth <= 3; ++depth) {
    auto fast = closure_tau_count(Z2, gens, depth);
    auto slow = oracle::closure_taus(Z2, gens, depth);
    ASSERT_TRUE(fast.complete);
    EXPECT_EQ(fast.tau_values.size(), slow.size());
    for (const auto &t : slow)
      EXPECT_NE(std::find(fast.tau_values.begin(), fast.tau_values.end(), t), fast.tau_values.end());
  }
}
