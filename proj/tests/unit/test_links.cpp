#include <gtest/gtest.h>

#include "bqk/combinators.hpp"
#include "bqk/group_constructions.hpp"
#include "bqk/links.hpp"
#include "oracle.hpp"

using namespace bqk;

static oracle::Rows rows(const Table& t) {
  oracle::Rows r;
  for (const auto& x : t.rows()) r.push_back(std::vector<int>(x.begin(), x.end()));
  return r;
}

static Permutation cycle(std::size_t n) {
  std::vector<Elem> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Elem>((i + 1) % n);
  return Permutation(v);
}

static std::vector<FiniteBiquandle> small_corpus() {
  return {wada_biquandle(symmetric_group(3)),
          alexander_biquandle(5, 3, 2),
          alexander_biquandle(4, 1, 3),
          gen_alexander_biquandle(cyclic_group(5), multiplication_map(5, 3), multiplication_map(5, 2)),
          union_biquandle_constant(trivial_quandle(2), trivial_quandle(3), cycle(2), cycle(3)),
          biquandle_of_quandle(dihedral_quandle(3)),
          biquandle_of_quandle(dihedral_quandle(4))};
}

TEST(Diagram, ComponentsOfBuiltins) {
  auto d = builtin_diagrams();
  EXPECT_EQ(d.at("unknot").components(), 1);
  EXPECT_EQ(d.at("unlink2").components(), 2);
  EXPECT_EQ(d.at("unlink3").components(), 3);
  EXPECT_EQ(d.at("kink+").components(), 1);
  EXPECT_EQ(d.at("kink-").components(), 1);
  EXPECT_EQ(d.at("hopf").components(), 2);
  EXPECT_EQ(d.at("trefoil").components(), 1);
  EXPECT_EQ(d.at("vhopf").components(), 2);
  EXPECT_EQ(d.at("vhopf").arc_count(), 4u);
  EXPECT_EQ(unlink_diagram(4).components(), 4);
}

TEST(Diagram, ParseErrorsCarryLines) {
  try {
    parse_diagram("= a a\nX + a b\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  // arc c ends twice
  EXPECT_THROW(parse_diagram("X + a b c d\n= c a\n= d b\n= c b\n"), ParseError);
  // dangling
  EXPECT_THROW(parse_diagram("= a b\n"), ParseError);
  EXPECT_THROW(parse_diagram("Y a b\n"), ParseError);
  EXPECT_THROW(parse_diagram("X * a b c d\n"), ParseError);
  EXPECT_NO_THROW(parse_diagram("# comment only\n\n= a a  # trailing\n"));
}

TEST(Diagram, TextRoundTrip) {
  for (const auto& [name, text] : builtin_diagram_texts()) {
    auto d = parse_diagram(text);
    auto e = parse_diagram(to_text(d));
    EXPECT_EQ(to_text(e), to_text(d)) << name;
    EXPECT_EQ(e.components(), d.components());
  }
}

TEST(Coloring, AgreesWithBruteForce) {
  auto texts = builtin_diagram_texts();
  for (const auto& b : small_corpus()) {
    auto u = rows(b.under_table()), o = rows(b.over_table());
    for (const auto& [name, text] : texts) {
      auto d = parse_diagram(text);
      if (d.arc_count() > 6) continue;
      EXPECT_EQ(coloring_count_biquandle(d, b), oracle::count_colorings(text, u, o)) << name << " size " << b.size();
    }
  }
}

TEST(Coloring, BraidMovesPreserveCounts) {
  using oracle::braid_closure;
  for (const auto& b : small_corpus()) {
    const unsigned long long n = b.size();
    auto count = [&](int s, std::vector<int> w) { return coloring_count_biquandle(parse_diagram(braid_closure(s, w)), b); };
    // Reidemeister I: one-crossing closure on two strands is an unknot
    EXPECT_EQ(count(2, {1}), n);
    EXPECT_EQ(count(2, {-1}), n);
    // Reidemeister II: sigma sigma^-1 closes to a 2-unlink
    EXPECT_EQ(count(2, {1, -1}), n * n);
    EXPECT_EQ(count(2, {-1, 1}), n * n);
    // Reidemeister III
    EXPECT_EQ(count(3, {1, 2, 1}), count(3, {2, 1, 2}));
    EXPECT_EQ(count(3, {-1, -2, -1}), count(3, {-2, -1, -2}));
    EXPECT_EQ(count(3, {1, -2, -1}), count(3, {-2, -1, 2}));
    // virtual moves
    EXPECT_EQ(count(2, {1001, 1001}), n * n);
    EXPECT_EQ(count(3, {1001, 1002, 1001}), count(3, {1002, 1001, 1002}));
    EXPECT_EQ(count(3, {1, 1002, 1001}), count(3, {1002, 1001, 2}));
  }
}

TEST(Coloring, TrefoilAndHopfKnownValues) {
  auto d = builtin_diagrams();
  auto r3 = dihedral_quandle(3);
  EXPECT_EQ(coloring_count_quandle(d.at("trefoil"), r3), 9u);
  EXPECT_EQ(coloring_count_quandle(parse_diagram(oracle::braid_closure(2, {1, 1, 1})), r3), 9u);
  EXPECT_EQ(coloring_count_quandle(d.at("trefoil"), dihedral_quandle(5)), 5u);
  EXPECT_EQ(coloring_count_quandle(d.at("hopf"), dihedral_quandle(4)), 8u);
  EXPECT_EQ(coloring_count_quandle(d.at("unknot"), r3), 3u);
}

TEST(Coloring, TrivialQuandleCountsComponents) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto t = trivial_quandle(n);
    for (const auto& [name, d] : builtin_diagrams()) {
      unsigned long long want = 1;
      for (int i = 0; i < d.components(); ++i) want *= n;
      EXPECT_EQ(coloring_count_quandle(d, t), want) << name;
    }
  }
}

TEST(Coloring, QuandleEqualsItsBiquandle) {
  for (const auto& q : {dihedral_quandle(3), dihedral_quandle(4), dihedral_quandle(5), conj_quandle(symmetric_group(3), 1),
                        trivial_quandle(3)})
    for (const auto& [name, d] : builtin_diagrams())
      EXPECT_EQ(coloring_count_quandle(d, q), coloring_count_biquandle(d, biquandle_of_quandle(q))) << name;
}

TEST(Coloring, VirtualHopfSeparates) {
  auto d = builtin_diagrams();
  for (auto [m, k] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 3}}) {
    auto b = union_biquandle_constant(trivial_quandle(m), trivial_quandle(k), cycle(m), cycle(k));
    EXPECT_EQ(coloring_count_biquandle(d.at("vhopf"), b), m * m + k * k);
    EXPECT_EQ(coloring_count_biquandle(d.at("unlink2"), b), (m + k) * (m + k));
  }
}

TEST(Coloring, JobsGiveSameCount) {
  auto b = wada_biquandle(symmetric_group(3));
  for (const auto& [name, d] : builtin_diagrams())
    EXPECT_EQ(coloring_count_biquandle(d, b, 1), coloring_count_biquandle(d, b, 3)) << name;
}

TEST(Coloring, VirtualCrossingOnlyIdentifies) {
  // one virtual crossing closed up: a virtual unknot, any labeling constant on it
  auto d = parse_diagram("V a b b a\n");
  EXPECT_EQ(d.components(), 1);
  for (const auto& b : small_corpus()) EXPECT_EQ(coloring_count_biquandle(d, b), b.size());
}

TEST(Coloring, ArcCap) {
  auto saved = arc_cap();
  arc_cap() = 3;
  EXPECT_THROW(unlink_diagram(4), ResourceError);
  arc_cap() = saved;
}
