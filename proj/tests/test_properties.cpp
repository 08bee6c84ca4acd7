#include <gtest/gtest.h>

#include "oddchain/oddchain.hpp"

using namespace oddchain;

namespace {
const char *kAlgebras[] = {"Z",         "Q",         "Z^2",           "Z_2",          "Z_3",
                           "Q_2",       "Q_3",       "PLPI(Q,Z,Q_2)", "PLPIII(Z,2Z,4Z,Z)",
                           "PLPIV(Z_2,Z x 2Z,Q)",    "PLPII(Z^2,Q_2)", "BOUNDED(Z_2)", "BOUNDED(PLPI(Q,Z,Q))",
                           "PLPII(PLPII(Z,Z),Z)",    "PLPI(Z,3Z,PLPIII(Q,Z,2Z,Z))"};
}

class Suites : public ::testing::TestWithParam<const char *> {};

TEST_P(Suites, AllPropertiesHold) {
  Algebra A = parse_algebra(GetParam());
  VerifyOptions o;
  o.samples = 3000;
  o.seed = 17;
  for (const auto &r : run_suite(A, "all", o)) {
    EXPECT_TRUE(r.ok()) << GetParam() << " " << r.name << ": "
                        << (r.witnesses.empty() ? std::string() : r.witnesses.front());
  }
}

INSTANTIATE_TEST_SUITE_P(Algebras, Suites, ::testing::ValuesIn(kAlgebras));

TEST(Suites, ReassociationOfNestedTypeTwo) {
  Algebra A = parse_algebra("PLPII(PLPII(PLPII(Z,Z),Z^2),Q)");
  auto f = fuse_type2_chains(A);
  EXPECT_EQ(to_string(f.algebra), "PLPII(Z,PLPII(Z,PLPII(Z^2,Q)))");
  VerifyOptions o;
  o.samples = 2000;
  EXPECT_TRUE(check_homomorphism("re-association", A, f.algebra, f.map, o).ok());
}

TEST(Suites, DeterministicPerSeed) {
  Algebra A = parse_algebra("Z_3");
  VerifyOptions o;
  o.samples = 500;
  auto a = check_tau(A, o), b = check_tau(A, o);
  EXPECT_EQ(a.note, b.note);
  EXPECT_EQ(a.checked, b.checked);
}

TEST(Suites, DetectsABrokenMap) {
  Algebra A = make_Zj(2);
  VerifyOptions o;
  o.samples = 200;
  auto shifted = [&](const Elem &e) { return e == A.unit() ? e : detail::neg(A, e); };
  EXPECT_FALSE(check_homomorphism("broken", A, A, shifted, o).ok());
}
