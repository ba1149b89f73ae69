#include <gtest/gtest.h>

#include "bqk/combinators.hpp"
#include "bqk/group_constructions.hpp"
#include "bqk/json_io.hpp"
#include "oracle.hpp"

using namespace bqk;

static oracle::Rows rows(const Table& t) {
  oracle::Rows r;
  for (const auto& x : t.rows()) r.push_back(std::vector<int>(x.begin(), x.end()));
  return r;
}

TEST(Permutation, CompositionAndCycles) {
  Permutation g({1, 2, 0}), f({1, 0, 2});
  EXPECT_EQ((g * f)(0), g(f(0)));
  EXPECT_EQ((g * g.inverse()), Permutation::identity(3));
  EXPECT_EQ(g.cycles(), "(0,1,2)");
  EXPECT_EQ(Permutation::identity(4).cycles(), "()");
  EXPECT_THROW(Permutation({0, 0, 1}), DomainError);
}

TEST(PermutationGroup, Closure) {
  auto s3 = PermutationGroup::generated_by({Permutation({1, 2, 0}), Permutation({1, 0, 2})}, 3);
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_TRUE(s3.is_closed());
  auto not_group = PermutationGroup::from_elements({Permutation::identity(3), Permutation({1, 2, 0})}, 3);
  EXPECT_FALSE(not_group.is_closed());
}

TEST(Table, RejectsBadShapes) {
  EXPECT_THROW(Table::from_rows({}), MalformedInput);
  EXPECT_THROW(Table::from_rows({{0, 1}, {0}}), MalformedInput);
  EXPECT_THROW(Table::from_rows({{0, 2}, {1, 1}}), MalformedInput);
}

TEST(Quandle, DihedralR3Table) {
  // x*y = 2y - x mod 3
  auto r3 = dihedral_quandle(3);
  oracle::Rows want = {{0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  EXPECT_EQ(rows(r3.table()), want);
  EXPECT_TRUE(is_connected(r3));
  EXPECT_TRUE(is_faithful(r3));
  EXPECT_TRUE(is_involutory_quandle(r3));
  EXPECT_EQ(inner_group(r3).order(), 6u);
  EXPECT_EQ(inner_group(dihedral_quandle(4)).order(), 4u);
}

TEST(Quandle, AxiomWitnesses) {
  auto r = check_quandle(std::vector<std::vector<long long>>{{1, 0}, {0, 1}});
  EXPECT_TRUE(r.has("q1"));
  auto r2 = check_quandle(std::vector<std::vector<long long>>{{0, 0}, {1, 1}});
  EXPECT_TRUE(r2.passed());  // trivial quandle T_2
  auto bad = check_quandle(std::vector<std::vector<long long>>{{0, 5}, {1, 1}});
  EXPECT_TRUE(bad.has("range"));
  EXPECT_THROW(FiniteQuandle(Table::from_rows({{1, 0}, {0, 1}})), DomainError);
}

TEST(Quandle, OrbitsOfTrivialAndUnion) {
  EXPECT_EQ(orbits(trivial_quandle(3)).size(), 3u);
  auto u = union_quandle(dihedral_quandle(3), dihedral_quandle(5));
  auto o = orbits(u);
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o[0].size(), 3u);
  EXPECT_EQ(o[1].size(), 5u);
}

TEST(Quandle, ConstructedFamiliesPassOracle) {
  std::vector<FiniteQuandle> qs = {conj_quandle(symmetric_group(3), 1), conj_quandle(symmetric_group(3), -2),
                                   core_quandle(symmetric_group(3)), takasaki(cyclic_group(6)),
                                   alexander_quandle(cyclic_group(7), multiplication_map(7, 3)),
                                   product_quandle(dihedral_quandle(3), trivial_quandle(2))};
  for (const auto& q : qs) EXPECT_TRUE(oracle::is_quandle(rows(q.table())));
  EXPECT_THROW(takasaki(symmetric_group(3)), DomainError);
}

TEST(Biquandle, FromQuandleAndBack) {
  for (std::size_t n = 1; n <= 7; ++n) {
    auto q = dihedral_quandle(n);
    auto b = biquandle_of_quandle(q);
    EXPECT_TRUE(check_biquandle(b.under_table(), b.over_table()).passed());
    EXPECT_EQ(associated_quandle(b), q);
  }
}

TEST(Biquandle, WitnessOnBrokenTables) {
  // under from R3, over a non-automorphism constant map
  Table u = dihedral_quandle(3).table();
  Table o = Table::from_rows({{1, 1, 1}, {2, 2, 2}, {0, 0, 0}});
  auto rep = check_biquandle(u, o);
  EXPECT_FALSE(rep.passed());
  EXPECT_THROW(FiniteBiquandle(u, o), DomainError);
}

TEST(Biquandle, InverseTablesAndS) {
  auto b = alexander_biquandle(5, 3, 2);
  for (Elem x = 0; x < 5; ++x)
    for (Elem y = 0; y < 5; ++y) {
      EXPECT_EQ(b.under_inv(b.under(x, y), y), x);
      EXPECT_EQ(b.over_inv(b.over(x, y), y), x);
      auto [p, q] = b.S(x, y);
      EXPECT_EQ(b.S_inv(p, q), std::make_pair(x, y));
    }
}

TEST(YangBaxter, GroupBiquandlesSatisfy) {
  for (const auto& b : {wada_biquandle(cyclic_group(3)), wada_biquandle(symmetric_group(3)),
                        alexander_biquandle(7, 3, 2), biquandle_of_quandle(dihedral_quandle(5))})
    EXPECT_TRUE(check_ybe(b).passed());
}

TEST(YangBaxter, RejectsNonSolution) {
  // swap-twisted tables: bijective but not a braid solution
  Table u = Table::from_rows({{1, 1, 1}, {2, 2, 2}, {0, 0, 0}});
  Table o = Table::from_rows({{0, 1, 0}, {1, 0, 1}, {2, 2, 2}});
  EXPECT_FALSE(check_ybe(u, o).passed());
}

TEST(Json, RoundTripBitExact) {
  auto q = dihedral_quandle(5);
  auto j = to_json(q);
  EXPECT_EQ(to_json(quandle_from_json(parse_json_text(j.dump()))).dump(), j.dump());
  auto b = alexander_biquandle(5, 3, 2);
  EXPECT_EQ(to_json(biquandle_from_json(to_json(b))).dump(), to_json(b).dump());
  auto g = symmetric_group(3);
  EXPECT_EQ(to_json(group_from_json(to_json(g))).dump(), to_json(g).dump());
  auto s = inverse_inner_structure(dihedral_quandle(3));
  EXPECT_EQ(structure_from_json(to_json(s)), s);
}

TEST(Json, MalformedInput) {
  EXPECT_THROW(parse_json_text("{"), MalformedInput);
  EXPECT_THROW(quandle_from_json(parse_json_text(R"({"n":2,"table":[[0,0]]})")), MalformedInput);
  EXPECT_THROW(quandle_from_json(parse_json_text(R"({"n":3,"table":[[0,0],[1,1]]})")), MalformedInput);
  EXPECT_THROW(quandle_from_json(parse_json_text(R"({"n":2,"table":[[1,0],[0,1]]})")), DomainError);
}
