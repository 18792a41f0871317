#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "omegagraph/classify.hpp"
#include "omegagraph/errors.hpp"
#include "oracle_checks.hpp"
#include "random_graphs.hpp"

using namespace omegagraph;
using namespace omegagraph::testing;

namespace {

VertexSet vs(std::initializer_list<VertexId> v) { return VertexSet(v); }

const OracleComponent& oracle_component_of(const std::vector<OracleComponent>& comps, const VertexId& v) {
  for (const auto& c : comps) {
    if (std::find(c.vertices.begin(), c.vertices.end(), v) != c.vertices.end()) return c;
  }
  throw std::logic_error("vertex not in truncation");
}

}  // namespace

TEST(IsTough, Examples) {
  EXPECT_TRUE(is_tough(fixture("ray")));
  EXPECT_TRUE(is_tough(fixture("domray")));
  EXPECT_FALSE(is_tough(fixture("star")));
  EXPECT_FALSE(is_tough(fixture("thetafan")));
  EXPECT_FALSE(is_tough(fixture("comb")));
  EXPECT_FALSE(is_tough(fixture("combo")));
}

TEST(IsTough, MatchesOracleGrowth) {
  RandomGraphs gen(71);
  for (int i = 0; i < 120; ++i) {
    const auto g = PatternGraph::validate(gen.spec());
    if (is_tough(g)) {
      for (int j = 0; j < 4; ++j) {
        const auto x = gen.vertex_set(g, 3);
        const auto b = remove_vertices(g, x)->bound();
        const auto small = oracle_components(truncate(g, {b.periods + 2, b.copies + 2}), x);
        const auto large = oracle_components(truncate(g, {b.periods + 2, b.copies + 5}), x);
        EXPECT_EQ(small.size(), large.size());
      }
    } else {
      // some declared attachment set has a growing family
      const auto y = declared_critical_sets(g, 100, 1).front();
      EXPECT_TRUE(oracle_family_grows(g, y));
    }
  }
}

TEST(EndTough, Examples) {
  EXPECT_TRUE(is_end_tough(fixture("star")));
  EXPECT_TRUE(end_witnesses(fixture("star")).empty());

  const auto comb = end_witnesses(fixture("comb"));
  ASSERT_EQ(comb.size(), 1u);
  EXPECT_FALSE(comb[0].tough);
  EXPECT_EQ(comb[0].periodic_fan, std::optional<std::string>("pfan:s1"));
  EXPECT_FALSE(is_end_tough(fixture("comb")));

  const auto domray = end_witnesses(fixture("domray"));
  ASSERT_EQ(domray.size(), 1u);
  EXPECT_TRUE(domray[0].tough);
  EXPECT_EQ(domray[0].separator, vs({core("d")}));
  EXPECT_TRUE(is_end_tough(fixture("domray")));
}

TEST(EndTough, WitnessesAgreeWithOracle) {
  RandomGraphs gen(72);
  for (int i = 0; i < 120; ++i) {
    const auto g = PatternGraph::validate(gen.spec());
    for (const auto& w : end_witnesses(g)) {
      const auto* s = g.find_strip(w.strip);
      ASSERT_NE(s, nullptr);
      EXPECT_EQ(w.tough, !s->periodic_fan.has_value());
      // a deletion set that a non-tough end should survive
      const auto x = w.tough ? w.separator : gen.vertex_set(g, 3);
      const auto b = remove_vertices(g, x)->bound();
      const std::uint64_t periods = b.periods + 3;
      const auto comps = oracle_components(truncate(g, {periods, b.copies + 2}), x);
      const auto& tail = oracle_component_of(comps, VertexId::strip(w.strip, periods - 1, s->period.vertices.front()));
      bool has_fan = false;
      for (const auto& v : tail.vertices) has_fan |= v.kind == VertexKind::Fan || v.kind == VertexKind::PeriodicFan;
      EXPECT_EQ(has_fan, !w.tough) << w.strip << " " << to_token(x);
    }
  }
}

TEST(Trichotomy, FixtureTable) {
  const std::map<std::string, Trichotomy> expected = {
      {"ray", Trichotomy::Tough},           {"domray", Trichotomy::Tough},
      {"star", Trichotomy::OnePointCase},   {"thetafan", Trichotomy::OnePointCase},
      {"comb", Trichotomy::NeitherCase},    {"combo", Trichotomy::NeitherCase},
  };
  for (const auto& [name, t] : expected) EXPECT_EQ(classify(fixture(name)).trichotomy, t) << name;
}

TEST(Trichotomy, TotalAndExclusive) {
  RandomGraphs gen(73);
  std::set<Trichotomy> seen;
  for (int i = 0; i < 200; ++i) {
    const auto c = classify(PatternGraph::validate(gen.spec()));
    seen.insert(c.trichotomy);
    EXPECT_EQ(c.trichotomy == Trichotomy::Tough, c.tough);
    EXPECT_EQ(c.trichotomy == Trichotomy::OnePointCase, c.end_tough && !c.tough);
    EXPECT_EQ(c.trichotomy == Trichotomy::NeitherCase, !c.end_tough && !c.tough);
    // a tough graph has no fans, so every end is tough too
    if (c.tough) EXPECT_TRUE(c.end_tough);
  }
  EXPECT_EQ(seen.size(), 3u);
}

TEST(DegreeExplanation, Examples) {
  const auto domray = infinite_degree_explanation(fixture("domray"), core("d"));
  EXPECT_FALSE(domray.is_finite());
  EXPECT_EQ(domray.dominated_strips, std::vector<std::string>{"s1"});
  EXPECT_TRUE(domray.critical_sets.empty());

  const auto star = infinite_degree_explanation(fixture("star"), core("c"));
  EXPECT_TRUE(star.dominated_strips.empty());
  EXPECT_EQ(star.critical_sets, std::vector<VertexSet>{vs({core("c")})});

  EXPECT_EQ(infinite_degree_explanation(fixture("ray"), sv(5)).finite_degree, std::optional<std::size_t>(2));
  EXPECT_EQ(infinite_degree_explanation(fixture("star"), VertexId::fan("f1", 3, "u")).finite_degree,
            std::optional<std::size_t>(1));

  try {
    infinite_degree_explanation(fixture("ray"), core("z"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownVertex);
  }
}

TEST(DegreeExplanation, Combo) {
  const auto g = fixture("combo");
  EXPECT_EQ(infinite_degree_explanation(g, core("d")).dominated_strips, std::vector<std::string>{"s1"});
  for (const char* name : {"a", "b"}) {
    const auto e = infinite_degree_explanation(g, core(name));
    EXPECT_EQ(e.critical_sets, std::vector<VertexSet>{vs({core("a"), core("b")})});
  }
  const auto p3 = infinite_degree_explanation(g, sv(3));
  EXPECT_EQ(p3.critical_sets, std::vector<VertexSet>{vs({sv(3)})});
  EXPECT_TRUE(p3.dominated_strips.empty());
}

TEST(DegreeExplanation, ValidatedOnRandomGraphs) {
  RandomGraphs gen(74);
  std::size_t infinite = 0;
  for (int i = 0; i < 100; ++i) {
    const auto g = PatternGraph::validate(gen.spec());
    for (const auto& v : RandomGraphs::candidates(g)) {
      const auto e = infinite_degree_explanation(g, v);
      if (e.is_finite()) {
        EXPECT_EQ(*e.finite_degree, oracle_degree(g, v, {8, 6})) << v.token();
        continue;
      }
      ++infinite;
      EXPECT_GT(oracle_degree(g, v, {12, 10}), oracle_degree(g, v, {8, 6})) << v.token();
      for (const auto& s : e.dominated_strips) {
        EXPECT_LT(oracle_strip_neighbours(g, v, s, 8), oracle_strip_neighbours(g, v, s, 12)) << v.token();
      }
      for (const auto& y : e.critical_sets) {
        EXPECT_TRUE(y.count(v));
        EXPECT_TRUE(oracle_family_grows(g, y));
      }
    }
  }
  EXPECT_GT(infinite, 20u);
}

TEST(EnumerateCritical, Examples) {
  EXPECT_EQ(enumerate_critical(fixture("star"), 1, 0), std::vector<VertexSet>{vs({core("c")})});
  EXPECT_EQ(enumerate_critical(fixture("comb"), 1, 3),
            (std::vector<VertexSet>{vs({sv(0)}), vs({sv(1)}), vs({sv(2)})}));
  EXPECT_TRUE(enumerate_critical(fixture("ray"), 3, 10).empty());
  EXPECT_TRUE(enumerate_critical(fixture("thetafan"), 1, 5).empty());
  EXPECT_EQ(enumerate_critical(fixture("thetafan"), 2, 0), std::vector<VertexSet>{vs({core("a"), core("b")})});
}

TEST(EnumerateCritical, MonotoneInBounds) {
  RandomGraphs gen(75);
  for (int i = 0; i < 100; ++i) {
    const auto g = PatternGraph::validate(gen.spec());
    const auto base = enumerate_critical(g, 1, 2);
    const auto bigger = enumerate_critical(g, 3, 4);
    EXPECT_TRUE(std::includes(bigger.begin(), bigger.end(), base.begin(), base.end()));
    EXPECT_EQ(is_tough(g), enumerate_critical(g, 8, 3).empty());
  }
}

TEST(EnumerateCritical, CompleteAgainstOracle) {
  // every Y among small candidate sets that the oracle sees growing is enumerated
  for (const auto& name : fixture_names()) {
    const auto g = fixture(name);
    const auto listed = enumerate_critical(g, 2, 3);
    auto pool = RandomGraphs::candidates(g);
    std::erase_if(pool, [](const VertexId& v) { return v.kind == VertexKind::Strip && v.period >= 3; });
    std::vector<VertexSet> ys;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      ys.push_back({pool[i]});
      for (std::size_t j = i + 1; j < pool.size(); ++j) ys.push_back({pool[i], pool[j]});
    }
    for (const auto& y : ys) {
      const bool grows = oracle_family_grows(g, y);
      EXPECT_EQ(grows, std::binary_search(listed.begin(), listed.end(), y)) << name << " " << to_token(y);
    }
  }
}
