#include <gtest/gtest.h>

#include "oracles.hpp"
#include "semidet/enumeration.hpp"
#include "semidet/errors.hpp"
#include "semidet/mobius.hpp"
#include "semidet/table_io.hpp"

using namespace semidet;

namespace {

ElementId id(const CayleyTable& S, const std::string& label) { return S.find(label).value(); }

FormalSum parse_sum(const CayleyTable& S, const std::map<std::string, std::int64_t>& terms) {
  FormalSum out;
  for (const auto& [l, c] : terms) out.add(id(S, l), c);
  return out;
}

}  // namespace

TEST(Mobius, ChainAndBooleanLattice) {
  // Chain 0 < 1 < 2.
  Poset chain{BoolMatrix(3), {}};
  for (ElementId a = 0; a < 3; ++a)
    for (ElementId b = a; b < 3; ++b) chain.leq.set(a, b);
  const MobiusTable mu(chain);
  EXPECT_EQ(mu(0, 0), 1);
  EXPECT_EQ(mu(0, 1), -1);
  EXPECT_EQ(mu(0, 2), 0);
  // Subsets of {x, y} as bitmasks.
  Poset cube{BoolMatrix(4), {}};
  for (ElementId a = 0; a < 4; ++a)
    for (ElementId b = 0; b < 4; ++b)
      if ((a & b) == a) cube.leq.set(a, b);
  const MobiusTable mc(cube);
  EXPECT_EQ(mc(0, 3), 1);
  EXPECT_EQ(mc(1, 3), -1);
}

TEST(Mobius, InversionIdentityOnCorpus) {
  for (std::size_t n = 1; n <= 4; ++n)
    enumerate(n, EnumerationFilter::standing_assumptions(), [](const CayleyTable& S) {
      const OrderedSemigroup os(S);
      const MobiusTable mu = mobius(os.poset());
      for (ElementId a = 0; a < S.size(); ++a)
        for (ElementId b = 0; b < S.size(); ++b) {
          if (!os.leq(a, b)) continue;
          std::int64_t sum = 0;
          for (ElementId c = 0; c < S.size(); ++c)
            if (os.leq(a, c) && os.leq(c, b)) sum += mu(a, c);
          ASSERT_EQ(sum, a == b ? 1 : 0);
        }
    });
}

TEST(Mobius, FormalSumRendering) {
  const CayleyTable S = load_table(oracle::data_path("s7.tbl"));
  FormalSum x = parse_sum(S, {{"u", -1}, {"y", 1}, {"z", 1}});
  EXPECT_EQ(x.render(S), "y+z-u");
  x.add(id(S, "y"), -1);
  EXPECT_EQ(x.render(S), "z-u");
  EXPECT_EQ(FormalSum().render(S), ".");
  EXPECT_EQ(x.scaled(-2).render(S), "-2z+2u");
  x += x.scaled(-1);
  EXPECT_TRUE(x.is_zero());
}

TEST(Mobius, ZSupportsOfSevenElementExample) {
  const OrderedSemigroup os(load_table(oracle::data_path("s7.tbl")));
  const CayleyTable& S = os.table();
  const std::map<std::string, std::string> expected{
      {"y", "y"},         {"z", "z"},         {"u", "y+z+u"},
      {"t", "y+z+t"},     {"w", "y+z+u+t+w"}, {"v", "y+z+u+t+v"},
      {"q", "y+z+u+t+w+v+q"}};
  for (const auto& [s, z] : expected) EXPECT_EQ(z_map(os, FormalSum::of(id(S, s))).render(S), z);
}

TEST(Mobius, ZInverseRoundTrip) {
  const OrderedSemigroup os(load_table(oracle::data_path("s7.tbl")));
  const MobiusTable mu = mobius(os.poset());
  for (ElementId s : os.basis()) {
    const FormalSum x = FormalSum::of(s, 3);
    EXPECT_EQ(z_inverse(os, mu, z_map(os, x)), x);
    EXPECT_EQ(z_map(os, z_inverse(os, mu, x)), x);
  }
}

TEST(Mobius, StarTableOfSevenElementExample) {
  const OrderedSemigroup os(load_table(oracle::data_path("s7.tbl")));
  const CayleyTable& S = os.table();
  const StructureConstants star = star_structure_constants(os, mobius(os.poset()));
  auto prod = [&](const char* a, const char* b) {
    return star.product(id(S, a), id(S, b)).render(S);
  };
  EXPECT_EQ(prod("u", "v"), "-y");
  EXPECT_EQ(prod("t", "w"), "-z");
  EXPECT_EQ(prod("w", "u"), "-z");
  EXPECT_EQ(prod("w", "v"), "-t");
  EXPECT_EQ(prod("v", "t"), "-y");
  EXPECT_EQ(prod("v", "w"), "-u");
  EXPECT_EQ(prod("y", "q"), ".");
  EXPECT_EQ(prod("q", "q"), "q");
}

TEST(Mobius, HomomorphismAndAgreementOnSevenElementExample) {
  const OrderedSemigroup os(load_table(oracle::data_path("s7.tbl")));
  EXPECT_TRUE(check_homomorphism(os).holds);
  EXPECT_TRUE(compare_star_products(os, mobius(os.poset())).agree);
}

TEST(Mobius, PairSumMatchesOracleZ) {
  for (std::size_t n = 1; n <= 3; ++n)
    enumerate(n, EnumerationFilter::standing_assumptions(), [](const CayleyTable& S) {
      const OrderedSemigroup os(S);
      const PairOrder pair(os);
      const oracle::Order ref(S, *oracle::star_plus(S));
      for (ElementId s : os.basis())
        for (ElementId t : os.basis()) {
          FormalSum expected;
          if (!S.is_zero(S(s, t)))
            for (ElementId x : ref.z_support(S(s, t))) expected.add(x, 1);
          ASSERT_EQ(pair_sum(os, pair, s, t), expected);
        }
    });
}

TEST(Mobius, ClosedFormsHoldForSevenElementExample) {
  const OrderedSemigroup os(load_table(oracle::data_path("s7.tbl")));
  const MobiusTable mu = mobius(os.poset());
  EXPECT_TRUE(theorem43_check(os, mu, star_structure_constants(os, mu)).empty());
}

TEST(Mobius, WitnessOnSevenElementExample) {
  const OrderedSemigroup os(load_table(oracle::data_path("s7.tbl")));
  const CayleyTable& S = os.table();
  const StarWitness w = noncommuting_star_witness(os, star_structure_constants(os, mobius(os.poset())));
  EXPECT_EQ(S.label(w.s), "u");
  EXPECT_EQ(S.label(w.t), "v");
  EXPECT_EQ(w.product.render(S), "-y");
}

TEST(Mobius, NoWitnessForCommutativeIdempotents) {
  const CayleyTable C2 = CayleyTable::from_indices({{0, 1}, {1, 0}});
  const OrderedSemigroup os(C2);
  EXPECT_THROW(noncommuting_star_witness(os, star_structure_constants(os, mobius(os.poset()))),
               NoWitness);
  EXPECT_THROW(minimal_pair_with_chain_property(os), NoWitness);
}

TEST(Mobius, MinimalPairWithChainProperty) {
  const OrderedSemigroup os(load_table(oracle::data_path("s7.tbl")));
  const CayleyTable& S = os.table();
  const auto [e, f] = minimal_pair_with_chain_property(os);
  const ElementId ef = S(e, f);
  EXPECT_NE(ef, S(f, e));
  EXPECT_EQ(os.plus(ef), e);
  EXPECT_EQ(os.star(ef), f);
  EXPECT_FALSE(has_chain_avoiding(os, ef, e, {e, ef}));
  EXPECT_FALSE(has_chain_avoiding(os, ef, f, {f, ef}));
}

TEST(Mobius, StructureConstantsOfSemigroupAlgebra) {
  const OrderedSemigroup os(load_table(oracle::data_path("s4.tbl")));
  const StructureConstants sc = semigroup_structure_constants(os);
  const CayleyTable& S = os.table();
  EXPECT_EQ(sc.dim(), 4u);
  EXPECT_EQ(sc(id(S, "y"), id(S, "u"), id(S, "y")), 1);
  EXPECT_TRUE(sc.product(id(S, "u"), id(S, "t")).is_zero());
}

TEST(Mobius, ClosedFormsHoldOnSmoothCorpus) {
  for (std::size_t n = 1; n <= 4; ++n)
    enumerate(n, EnumerationFilter::standing_assumptions(), [](const CayleyTable& S) {
      const OrderedSemigroup os(S);
      if (!is_lll_smooth(os).lll_smooth) return;
      const MobiusTable mu = mobius(os.poset());
      const auto bad = theorem43_check(os, mu, star_structure_constants(os, mu));
      EXPECT_TRUE(bad.empty()) << (bad.empty() ? "" : bad.front().what);
    });
}
