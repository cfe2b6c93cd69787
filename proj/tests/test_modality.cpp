#include "support.hpp"

#include <gtest/gtest.h>

using namespace fmrig;
using test::nf;
using test::nf2;

TEST(Unit, EmbedsGenerators) {
  const auto F = test::fm(2);
  EXPECT_EQ(unit(F, from_coords(NatPow{2}, {2, 1})), nf("x[2,1]", 2));
  EXPECT_TRUE(unit(F, MonoidElem<NatPow>::zero(NatPow{2})).is_zero());
  EXPECT_EQ(apply_functor(unit_hom(F), nf("x[1,0] * x[0,1]", 2)), nf2("y[x[1,0]] * y[x[0,1]]", 2));
}

TEST(EtaNabla, Basics) {
  const auto F = test::fm(1);
  EXPECT_EQ(eta(F, 3), nf("1 + 1 + 1"));
  EXPECT_TRUE(eta(F, 0).is_zero());
  EXPECT_EQ(nabla(tensor_pure(nf("x[1] + 1"), nf("f(x[1])"))), nf("(x[1] + 1) * f(x[1])"));
  const auto t = tensor_pure(nf("x[1]"), nf("1"), nf("x[2]"));
  EXPECT_EQ(nabla_front(t), tensor_pure(nf("x[1]"), nf("x[2]")));
  EXPECT_THROW(nabla(tensor_pure(nf("1"), nf("1", 2))), carrier_mismatch);
}

TEST(Mu, Examples) {
  // y[a] reads a back in FM; g becomes f.
  EXPECT_EQ(mu(nf2("y[x[1] * x[1]]")), nf("x[1] * x[1]"));
  EXPECT_EQ(mu(nf2("y[x[1]] * y[x[1]]")), nf("x[1] * x[1]"));
  EXPECT_EQ(mu(nf2("g(y[f(x[1])] + 1)")), nf("f(f(x[1]) + 1)"));
  EXPECT_EQ(mu(nf2("g(y[x[1]]) * y[x[1] + f(1)]")), nf("f(x[1]) * (x[1] + f(1))"));
  EXPECT_TRUE(mu(nf2("0")).is_zero());
  EXPECT_EQ(apply_functor(mu_hom(test::ffm(1)), normalize(parse("z[y[x[1]] * g(1)]", test::ffm(1)),
                                                             FreeRig<FreeRig<FreeRig<NatPow>>>{test::ffm(1), true})),
            normalize(parse("y[x[1]*f(1)]", test::fm(1)), test::ffm(1)));
}

TEST(Mu, RejectsMixedModes) {
  const FreeRig<NatPow> S{NatPow{1}, false};
  const FreeRig<FreeRig<NatPow>> mixed{S, true};
  EXPECT_THROW(mu(nf_generator(mixed, Monomial<NatPow>{})), carrier_mismatch);
}

TEST(Evaluate, CatalogTargets) {
  const auto a = nf("f(x[1])");
  EXPECT_EQ(evaluate(a, nat_rig("square"), std::vector<Nat>{3}), 9);
  EXPECT_EQ(evaluate(a, nat_rig("successor"), std::vector<Nat>{3}), 4);
  EXPECT_EQ(evaluate(a, nat_rig("identity"), std::vector<Nat>{3}), 3);
  EXPECT_EQ(evaluate(a, nat_rig("double"), std::vector<Nat>{3}), 6);
  EXPECT_EQ(evaluate(a, nat_rig("const-one"), std::vector<Nat>{3}), 1);
  EXPECT_EQ(evaluate(a, nat_rig("const-zero"), std::vector<Nat>{3}), 0);
  EXPECT_EQ(evaluate(nf("x[2,1] * f(f(1)) + 1", 2), nat_rig("successor"), std::vector<Nat>{2, 5}), 28);
  EXPECT_EQ(nat_rig_catalog().size(), 6u);
}

TEST(Evaluate, ExpressionTarget) {
  const auto t = nat_rig("x[1] * x[1] + x[3] + 1");
  EXPECT_EQ(t.self_map(4), 29);
  EXPECT_EQ(evaluate(nf("f(f(x[1]))"), t, std::vector<Nat>{1}), 41);  // 1 -> 5 -> 41
  EXPECT_THROW(nat_rig("f(x[1])").self_map(1), unsupported_operation);
  EXPECT_THROW(nat_rig("no such target"), parse_error);
}

TEST(Evaluate, MissingImage) {
  EXPECT_THROW(evaluate(nf("x[1,1]", 2), nat_rig("identity"), std::vector<Nat>{1}), missing_image);
  std::map<std::size_t, Nat> phi{{1, 4}};
  EXPECT_THROW(evaluate(nf("x[1,1]", 2), nat_rig("identity"), phi), missing_image);
  EXPECT_EQ(evaluate(nf("x[0,1]", 2), nat_rig("identity"), phi), 4);
}
