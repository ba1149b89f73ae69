#include <gtest/gtest.h>

#include "bqk/group_constructions.hpp"
#include "bqk/structures.hpp"
#include "oracle.hpp"

using namespace bqk;

static oracle::Rows rows(const Table& t) {
  oracle::Rows r;
  for (const auto& x : t.rows()) r.push_back(std::vector<int>(x.begin(), x.end()));
  return r;
}

TEST(Groups, Basics) {
  auto s3 = symmetric_group(3);
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_FALSE(s3.is_abelian());
  EXPECT_EQ(s3.exponent(), 6u);
  auto k = direct_product(cyclic_group(2), cyclic_group(2));
  EXPECT_TRUE(k.is_abelian());
  EXPECT_EQ(k.exponent(), 2u);
  EXPECT_EQ(center(s3).size(), 1u);
}

TEST(Groups, RejectsNonGroups) {
  EXPECT_THROW(FiniteGroup(Table::from_rows({{0, 1}, {0, 1}})), DomainError);
  // a loop that is not associative
  EXPECT_THROW(FiniteGroup(Table::from_rows({{0, 1, 2, 3, 4},
                                             {1, 0, 3, 4, 2},
                                             {2, 4, 0, 1, 3},
                                             {3, 2, 4, 0, 1},
                                             {4, 3, 1, 2, 0}})),
               DomainError);
}

TEST(Groups, OrderCap) {
  auto saved = group_order_cap();
  group_order_cap() = 5;
  EXPECT_THROW(cyclic_group(6), ResourceError);
  group_order_cap() = saved;
}

TEST(Groups, AutomorphismGroupsMatchOracle) {
  for (const auto& g : {cyclic_group(5), cyclic_group(6), symmetric_group(3), direct_product(cyclic_group(2), cyclic_group(2)),
                        cyclic_group(8)}) {
    auto lib = automorphism_group(g);
    auto brute = oracle::automorphisms({rows(g.table())});
    ASSERT_EQ(lib.size(), brute.size());
    for (std::size_t i = 0; i < lib.size(); ++i) EXPECT_EQ(lib[i].images(), brute[i]);
  }
  EXPECT_EQ(automorphism_group(direct_product(cyclic_group(2), cyclic_group(2))).size(), 6u);
}

TEST(Groups, FixedPointsAndCentralizers) {
  auto g = cyclic_group(7);
  EXPECT_TRUE(is_fixed_point_free(g, multiplication_map(7, 3)));
  EXPECT_EQ(fixed_points(multiplication_map(7, 3)).size(), 1u);
  auto autos = automorphism_group(g);
  EXPECT_EQ(centralizer_of_set(autos, {multiplication_map(7, 3)}).size(), 6u);
}

TEST(GroupConstructions, ConjAndCore) {
  auto g = symmetric_group(3);
  // Conj_0 is trivial
  EXPECT_EQ(orbits(conj_quandle(g, 0)).size(), 6u);
  // Conj_1: transpositions form one orbit of size 3
  auto o = orbits(conj_quandle(g, 1));
  std::vector<std::size_t> sizes;
  for (const auto& x : o) sizes.push_back(x.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_TRUE(is_involutory_quandle(core_quandle(g)));
}

TEST(GroupConstructions, DihedralEqualsTakasakiOfZn) {
  for (std::size_t n = 1; n <= 9; ++n) EXPECT_EQ(dihedral_quandle(n), takasaki(cyclic_group(n)));
}

TEST(GroupConstructions, BiquandleFamilies) {
  auto z9 = cyclic_group(9);
  auto gd = gen_dihedral_biquandle(z9, multiplication_map(9, 2));
  EXPECT_TRUE(check_biquandle(gd.under_table(), gd.over_table()).passed());
  auto ga = gen_alexander_biquandle(cyclic_group(5), multiplication_map(5, 3), multiplication_map(5, 2));
  EXPECT_TRUE(check_ybe(ga).passed());
  EXPECT_THROW(alexander_biquandle(6, 2, 1), DomainError);
  // phi, psi must commute
  auto s3 = symmetric_group(3);
  auto autos = automorphism_group(s3);
  bool threw = false;
  for (const auto& a : autos)
    for (const auto& b : autos)
      if (!commute(a, b)) {
        EXPECT_THROW(gen_alexander_biquandle(s3, a, b), DomainError);
        threw = true;
      }
  EXPECT_TRUE(threw);
}

TEST(GroupConstructions, WadaAssociatedQuandleIsConjInverse) {
  auto g = symmetric_group(3);
  auto w = wada_biquandle(g);
  EXPECT_TRUE(oracle::is_quandle(rows(associated_quandle(w).table())));
}

TEST(Groups, SmallGroupsUpToEight) {
  auto gs = small_groups(8);
  EXPECT_EQ(gs.size(), 14u);
  std::size_t abelian = 0;
  for (const auto& [name, g] : gs) abelian += g.is_abelian();
  EXPECT_EQ(abelian, 11u);
  auto d4 = dihedral_group(4), q8 = quaternion_group();
  EXPECT_EQ(center(d4).size(), 2u);
  EXPECT_EQ(center(q8).size(), 2u);
  EXPECT_EQ(automorphism_group(d4).size(), 8u);
  EXPECT_EQ(automorphism_group(q8).size(), 24u);
  // Q8 has a single involution, D4 has five
  auto involutions = [](const FiniteGroup& g) {
    std::size_t c = 0;
    for (Elem x = 0; x < static_cast<Elem>(g.order()); ++x) c += g.element_order(x) == 2;
    return c;
  };
  EXPECT_EQ(involutions(q8), 1u);
  EXPECT_EQ(involutions(d4), 5u);
}
