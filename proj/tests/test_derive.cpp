#include "oracle/term_derive.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace fmrig;
using test::nf;

namespace {

// Σ c · (left ⊗ e_key) built from readable pieces.
DerivTensor<NatPow> tensor_of(std::initializer_list<std::tuple<Nat, std::string, std::size_t>> parts, std::size_t k = 1) {
  DerivTensor<NatPow> out(std::tuple(test::fm(k), NatPow{k}));
  for (const auto& [c, left, key] : parts)
    out += tensor_pure(nf(left, k), MonoidElem<NatPow>::generator(NatPow{k}, key, c));
  return out;
}

}  // namespace

TEST(Derive, SelfMapScalesByN) {
  const auto fx = nf("f(x[1])");
  EXPECT_EQ(render(d_n(fx, 2)), "2*(1 ⊗ e[0])");
  EXPECT_TRUE(d_n(fx, 0).is_zero());
  EXPECT_EQ(d_n(nf("f(f(x[1]))"), 3), tensor_of({{9, "1", 0}}));
  EXPECT_TRUE(d_n(nf("f(1) + 1"), 5).is_zero());
}

TEST(Derive, Leibniz) {
  // d(x²·f(x)) with n = 2: 2x·f(x) ⊗ e + x²·2 ⊗ e.
  EXPECT_EQ(d_n(nf("x[1] * x[1] * f(x[1])"), 2), tensor_of({{2, "x[1] * f(x[1])", 0}, {2, "x[1] * x[1]", 0}}));
  EXPECT_EQ(d_n(nf("x[3]"), 1), tensor_of({{3, "1", 0}}));
  // [a] ⊗ d(b) + [b] ⊗ d(a) with a = e₀ + 2e₁, b = e₀.
  EXPECT_EQ(d_n(nf("x[1,2] * x[1,0]", 2), 1),
            tensor_of({{1, "x[1,2]", 0}, {1, "x[1,0]", 0}, {2, "x[1,0]", 1}}, 2));
}

TEST(Derive, SymmetricAlgebraExample) {
  // x₁²x₂ ↦ 2·(x₁x₂ ⊗ e₁) + (x₁² ⊗ e₂), with generators indexed from 0.
  const auto p = nf("x[1,0] * x[1,0] * x[0,1]", 2);
  EXPECT_EQ(sym_derive(p), tensor_of({{2, "x[1,0] * x[0,1]", 0}, {1, "x[1,0] * x[1,0]", 1}}, 2));
  EXPECT_THROW(sym_derive(nf("f(1)")), unsupported_operation);
}

TEST(Derive, SeededDerivation) {
  // ∂(x³ + 3x) with ∂x = x²: x²(3x² + 3) = 3x⁴ + 3x².
  EXPECT_EQ(seeded_derivation(nf("x[1]*x[1]*x[1] + x[3]"), nf("x[1]*x[1]")),
            nf("x[3]*x[1]*x[1]*x[1] + x[3]*x[1]"));
  EXPECT_TRUE(seeded_derivation(nf("1 + 1"), nf("x[1]")).is_zero());
  EXPECT_THROW(seeded_derivation(nf("x[1,0]", 2), nf("1", 2)), unsupported_operation);
  EXPECT_THROW(seeded_derivation(nf("f(x[1])"), nf("1")), unsupported_operation);
  EXPECT_THROW(seeded_derivation(nf("x[1]"), nf("1", 2)), carrier_mismatch);
}

TEST(Derive, AgreesWithTermOracle) {
  for (std::size_t k : {1u, 2u}) {
    const auto space = test::fm(k);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const auto t = random_term(GenConfig<NatPow>{NatPow{k}, 4, 2, 5, seed, 0});
      for (unsigned n : {0u, 1u, 2u, 3u, 7u})
        ASSERT_EQ(d_n(normalize(t, space), n), oracle::term_derive(t, n, space)) << print(t) << " n=" << n;
    }
  }
}

TEST(Derive, OracleClauses) {
  // The oracle on its own, against hand-computed values.
  const auto F = test::fm(1);
  EXPECT_TRUE(oracle::term_derive(parse("0", NatPow{1}), 3, F).is_zero());
  EXPECT_TRUE(oracle::term_derive(parse("1", NatPow{1}), 3, F).is_zero());
  EXPECT_EQ(oracle::term_derive(parse("x[2]", NatPow{1}), 3, F), tensor_of({{2, "1", 0}}));
  EXPECT_EQ(oracle::term_derive(parse("x[1]*x[1]", NatPow{1}), 3, F), tensor_of({{2, "x[1]", 0}}));
  EXPECT_EQ(oracle::term_derive(parse("f(x[1]) + x[1]", NatPow{1}), 3, F), tensor_of({{4, "1", 0}}));
}

TEST(Derive, LevelTwo) {
  const auto a2 = test::nf2("g(y[x[1]]) * y[x[1] + f(1)]");
  EXPECT_EQ(render(d_n_level2(a2, 3)), "3*(y[x[0]] ⊗ x[0]) + 3*(y[f(1*1)] ⊗ x[0]) + 1*(g(1*y[x[0]]) ⊗ x[0]) + "
                                       "1*(g(1*y[x[0]]) ⊗ f(1*1))");
}

TEST(Derive, UnitorAndMaps) {
  EXPECT_EQ(unitor_right(d_n(nf("x[1] * f(x[1])"), 4)), nf("f(x[1]) + x[4]"));
  EXPECT_THROW(unitor_right(d_n(nf("x[1,0]", 2), 1)), unsupported_operation);
  const auto t = tensor_pure(nf("x[1] + f(1)"));
  EXPECT_EQ(tensor_bimap(t, d_n_map(test::fm(1), 2)), d_n(nf("x[1] + f(1)"), 2));
}
