#include <gtest/gtest.h>

#include "gspecht/hecke.hpp"

using namespace gspecht;

namespace {

AlgebraParams prime_params(int e, std::vector<int> charge) {
  return AlgebraParams::make(FieldSpec::prime_field(default_prime(e), e), std::move(charge));
}

void expect_all_ok(const std::vector<CheckResult>& results) {
  for (auto& r : results) EXPECT_TRUE(r.ok) << r.name << ": " << r.detail;
}

}  // namespace

TEST(Hecke, DimensionIsLevelPowerTimesFactorial) {
  EXPECT_EQ(HeckeAlgebra(prime_params(3, {0}), 3).dim(), 6u);
  EXPECT_EQ(HeckeAlgebra(prime_params(2, {0, 1}), 2).dim(), 8u);
  EXPECT_EQ(HeckeAlgebra(prime_params(3, {0, 1}), 3).dim(), 48u);
  EXPECT_EQ(HeckeAlgebra(prime_params(4, {0, 2, 1}), 2).dim(), 18u);
  EXPECT_EQ(HeckeAlgebra(prime_params(2, {0}), 0).dim(), 1u);
}

TEST(Hecke, RelationsHoldLeftAndRight) {
  for (auto& [e, charge, d] : std::vector<std::tuple<int, std::vector<int>, int>>{
           {2, {0}, 4}, {3, {1}, 4}, {2, {0, 1}, 3}, {3, {0, 1}, 3}, {3, {0, 0}, 3}, {4, {0, 2}, 3}, {3, {0, 1, 2}, 2}}) {
    SCOPED_TRACE("e=" + std::to_string(e) + " d=" + std::to_string(d));
    HeckeAlgebra h(prime_params(e, charge), d);
    expect_all_ok(h.check_relations());
    expect_all_ok(h.check_products(40, 7));
  }
}

// Level one: X_1 is the scalar xi^{k}, and X_2 = xi^{-1} T_1 X_1 T_1 = xi^{k-1}((xi-1) T_1 + xi).
TEST(Hecke, LevelOneJucysMurphyByHand) {
  HeckeAlgebra h(prime_params(3, {2}), 3);
  const auto& f = h.field();
  Scalar xk = f.pow(h.xi(), 2);
  auto x1 = h.word_element({Gen::X(1)});
  auto expect1 = h.unit();
  for (auto& c : expect1) c = f.mul(c, xk);
  EXPECT_EQ(x1, expect1);
  auto x2 = h.word_element({Gen::X(2)});
  Vector expect2 = h.zero();
  Scalar scale = f.pow(h.xi(), 1);
  add_scaled(f, expect2, h.T_element(Permutation::simple(3, 1)), f.mul(scale, f.sub(h.xi(), 1)));
  add_scaled(f, expect2, h.unit(), f.mul(scale, h.xi()));
  EXPECT_EQ(x2, expect2);
}

// X_1 T_1 in normal form at level two, by hand: T_1 X_2 - (xi-1) X_2.
TEST(Hecke, ExchangeByHand) {
  HeckeAlgebra h(prime_params(3, {0, 1}), 2);
  const auto& f = h.field();
  auto lhs = h.word_element({Gen::X(1), Gen::T(1)});
  auto s1 = Permutation::simple(2, 1);
  Vector rhs = h.zero();
  rhs[h.index_of(s1, {0, 1})] = 1;
  rhs[h.index_of(Permutation(2), {0, 1})] = f.neg(f.sub(h.xi(), 1));
  EXPECT_EQ(lhs, rhs);
}

TEST(Hecke, CyclotomicReduction) {
  // X_1^2 = (xi^0 + xi^1) X_1 - xi^{0+1}
  HeckeAlgebra h(prime_params(3, {0, 1}), 1);
  const auto& f = h.field();
  auto sq = h.word_element({Gen::X(1), Gen::X(1)});
  Vector expect = h.zero();
  expect[h.index_of(Permutation(1), {1})] = f.add(1, h.xi());
  expect[h.index_of(Permutation(1), {0})] = f.neg(h.xi());
  EXPECT_EQ(sq, expect);
}

TEST(Hecke, RowSymmetriserIsEigenvector) {
  HeckeAlgebra h(prime_params(2, {0}), 4);
  auto m = m_element(h, parse_multipartition("4"));
  for (int r = 1; r < 4; ++r) {
    auto v = h.L(Gen::T(r)).apply(m);
    auto w = m;
    for (auto& c : w) c = h.field().mul(c, h.xi());
    EXPECT_EQ(v, w);
    EXPECT_EQ(h.R(Gen::T(r)).apply(m), w);
  }
  EXPECT_EQ(m_element(h, parse_multipartition("1,1,1,1")), h.unit());
}

TEST(Hecke, CellularElementsAreStarSymmetric) {
  HeckeAlgebra h(prime_params(3, {0, 1}), 3);
  for (auto& mu : multipartitions(2, 3)) {
    auto m = m_element(h, mu);
    EXPECT_EQ(h.star(m), m) << mu.to_string();
    auto ts = standard_tableaux(mu);
    for (auto& s : ts)
      for (auto& t : ts) EXPECT_EQ(h.star(m_element(h, s, t, m)), m_element(h, t, s, m));
  }
}

TEST(Hecke, CellularElementsSpanTheAlgebra) {
  for (auto& [e, charge, d] :
       std::vector<std::tuple<int, std::vector<int>, int>>{{2, {0}, 4}, {3, {0, 1}, 3}, {2, {0, 0}, 3}}) {
    HeckeAlgebra h(prime_params(e, charge), d);
    Echelon<PrimeField> span(h.field(), h.dim());
    for (auto& mu : multipartitions(static_cast<int>(charge.size()), d)) {
      auto m = m_element(h, mu);
      auto ts = standard_tableaux(mu);
      for (auto& s : ts)
        for (auto& t : ts) EXPECT_TRUE(span.insert(m_element(h, s, t, m)));
    }
    EXPECT_EQ(span.rank(), h.dim());
  }
}

TEST(Hecke, SizeBound) {
  EXPECT_THROW(HeckeAlgebra(prime_params(3, {0, 1}), 6, 1000), ResourceError);
  EXPECT_THROW(HeckeAlgebra(AlgebraParams::combinatorial(0, {0}), 2), ParameterError);
}

TEST(Hecke, DebugString) {
  HeckeAlgebra h(prime_params(3, {0}), 2);
  EXPECT_EQ(h.to_string(h.zero()), "0");
  EXPECT_NE(h.to_string(h.word_element({Gen::T(1)})).find("1 * T"), std::string::npos);
}
