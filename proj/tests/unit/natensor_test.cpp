#include <gtest/gtest.h>

#include "../support/common.hpp"

using namespace xbraid;
using namespace xbraid::testing;

namespace {

  using Q = Rationals;

  // Frozen from the stand-alone brute-force counter in tests/oracle.
  struct OracleDim {
    char const* name;
    std::size_t dim;
  };
  constexpr OracleDim oracle_dims[] = {{"Ab(1)", 1}, {"Ab(2)", 4}, {"Ab(3)", 9}, {"Heis3", 6}, {"sl2", 3}};

  TEST(TensorSquare, AbelianIsTheFullTensorSpace) {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto ts = tensor_square(catalog("Ab(" + std::to_string(n) + ")", QQ));
      EXPECT_EQ(ts.relations.dim(), 0u);
      EXPECT_EQ(ts.carrier.dim(), n * n);
      EXPECT_EQ(ts.carrier.mult, BilMap<Q>::zero(ts.carrier.space, ts.carrier.space, ts.carrier.space));
    }
  }

  TEST(TensorSquare, DimensionsMatchTheOracle) {
    for (auto const& [name, dim] : oracle_dims) {
      EXPECT_EQ(tensor_square(catalog(name, QQ)).carrier.dim(), dim) << name;
    }
  }

  TEST(TensorSquare, RejectsNonLie) {
    try {
      (void)tensor_square(catalog("Mat(2)", QQ));
      FAIL();
    } catch (Error const& e) {
      EXPECT_EQ(e.code(), Errc::not_lie);
    }
  }

  TEST(TensorXMod, Boundaries) {
    auto s  = catalog("sl2", QQ);
    auto ts = tensor_square(s);
    auto x  = tensor_xmod(ts);
    EXPECT_TRUE(validate_xmod_lie(x).passed());
    // d(e (x) f) = h
    EXPECT_EQ(x.d(ts.pure.image(1, 2)), qv({1, 0, 0}));

    auto h  = catalog("Heis3", QQ);
    auto th = tensor_square(h);
    auto xh = tensor_xmod(th);
    EXPECT_TRUE(validate_xmod_lie(xh).passed());
    EXPECT_EQ(xh.d(th.pure.image(0, 1)), qv({0, 0, 1}));

    auto a = tensor_xmod(tensor_square(catalog("Ab(2)", QQ)));
    EXPECT_TRUE(validate_xmod_lie(a).passed());
    EXPECT_EQ(a.boundary, LinMap<Q>::zero(a.m().space, a.n().space));
  }

  TEST(TensorBraiding, PassesBLie) {
    for (auto const* name : {"Ab(2)", "sl2", "Heis3"}) {
      auto ts = tensor_square(catalog(name, QQ));
      auto r  = validate_braiding_xmod_lie(tensor_braiding(ts));
      EXPECT_TRUE(r.passed()) << name;
      EXPECT_EQ(r.entries.size(), 6u);
      EXPECT_TRUE(validate_tensor_square(ts).passed()) << name;
      EXPECT_TRUE(antisymmetry_consequence(ts).passed()) << name;
    }
  }

  TEST(TensorSquare, OverF5) {
    PrimeField f(5);
    auto       ts = tensor_square(catalog("sl2", f));
    EXPECT_TRUE(validate_braiding_xmod_lie(tensor_braiding(ts)).passed());
  }

  std::vector<Algebra<Q>> lie_fixtures() {
    return {catalog("Ab(2)", QQ), catalog("sl2", QQ), catalog("Heis3", QQ), catalog("gl(2)", QQ)};
  }

  TEST(NatensorProperty, BoundaryOfPureTensorIsTheBracket) {
    for (auto const& m : lie_fixtures()) {
      auto ts = tensor_square(m);
      auto x  = tensor_xmod(ts);
      for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
          EXPECT_EQ(x.d(ts.pure.image(i, j)), m.basis_product(i, j));
        }
      }
    }
  }

  TEST(NatensorProperty, ActionIsBracketIntoTheFirstFactor) {
    // m . (m1 (x) m2) = m (x) [m1, m2] in T
    for (auto const& m : lie_fixtures()) {
      auto ts = tensor_square(m);
      auto x  = tensor_xmod(ts);
      auto n  = m.dim();
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            EXPECT_EQ(x.action.act(m.basis(a), ts.pure.image(b, c)), ts.pure(m.basis(a), m.basis_product(b, c)));
          }
        }
      }
    }
  }

  TEST(NatensorProperty, DimensionIndependentOfBasis) {
    std::mt19937 rng(61);
    for (auto const& m : lie_fixtures()) {
      auto d = tensor_square(m).carrier.dim();
      for (int round = 0; round < 3; ++round) {
        auto c = change_basis(m, random_invertible(m.space, rng));
        EXPECT_EQ(tensor_square(c).carrier.dim(), d);
      }
    }
  }

}  // namespace
