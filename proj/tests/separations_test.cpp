#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "omegagraph/errors.hpp"
#include "omegagraph/tangles.hpp"

using namespace omegagraph;
using namespace omegagraph::testing;

namespace {

VertexSet vs(std::initializer_list<VertexId> v) { return VertexSet(v); }

std::size_t family_index(const SystemPtr& cs, const FamilyHandle& h) {
  auto i = cs->family_index(h);
  EXPECT_TRUE(i.has_value()) << h.token();
  return i.value_or(0);
}

ErrorKind error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvariantFailure;
}

// s_{X→C} for the single component containing v
OrientedSeparation toward_component(const SystemPtr& cs, const VertexId& v) {
  return {SymbolicSubset::of(cs, {cs->locate(v)})};
}

}  // namespace

TEST(SymbolicSubset, ComplementIsInvolution) {
  const auto cs = remove_vertices(fixture("combo"), vs({core("a"), core("b"), sv(1)}));
  auto a = SymbolicSubset::of(cs, {cs->locate(sv(0)), cs->locate(VertexId::fan("f1", 3, "u"))});
  EXPECT_EQ(a.complement().complement(), a);
  EXPECT_NE(a.complement(), a);
  EXPECT_TRUE(a.intersect(a.complement()).empty());
  EXPECT_EQ(a.unite(a.complement()), SymbolicSubset::all(cs));
}

TEST(SymbolicSubset, AllButFinitelyIntersection) {
  const auto cs = remove_vertices(fixture("thetafan"), vs({core("a"), core("b")}));
  auto a = SymbolicSubset::none(cs);
  auto b = SymbolicSubset::none(cs);
  a.set_rule(0, CopyRule::all_but({0}));
  b.set_rule(0, CopyRule::all_but({1}));
  const auto c = a.intersect(b);
  EXPECT_EQ(c.rule(0), CopyRule::all_but({0, 1}));
  EXPECT_TRUE(c.is_cofinite_in_family(0));
}

TEST(SymbolicSubset, ParityIntersectionEmpty) {
  const auto cs = remove_vertices(fixture("thetafan"), vs({core("a"), core("b")}));
  auto even = SymbolicSubset::none(cs);
  auto odd = SymbolicSubset::none(cs);
  even.set_rule(0, CopyRule::parity(true));
  odd.set_rule(0, CopyRule::parity(false));
  EXPECT_TRUE(even.intersect(odd).empty());
  EXPECT_EQ(even.complement(), odd);
  EXPECT_EQ(even.unite(odd), SymbolicSubset::all(cs));
}

TEST(SymbolicSubset, ExcludedCopiesAreNormalized) {
  const auto g = fixture("thetafan");
  const auto cs = remove_vertices(g, vs({core("a"), core("b"), VertexId::fan("f1", 2, "u")}));
  auto a = SymbolicSubset::none(cs);
  a.set_rule(family_index(cs, FamilyHandle::core_fan("f1")), CopyRule::all_but({2, 4}));
  EXPECT_EQ(a.rule(family_index(cs, FamilyHandle::core_fan("f1"))), CopyRule::all_but({4}));
}

TEST(SymbolicSubset, BaseMismatch) {
  const auto g = fixture("ray");
  const auto a = SymbolicSubset::all(remove_vertices(g, vs({sv(0)})));
  const auto b = SymbolicSubset::all(remove_vertices(g, vs({sv(1)})));
  EXPECT_EQ(error_of([&] { a.intersect(b); }), ErrorKind::BaseMismatch);
}

TEST(SymbolicSubset, TamenessClosedUnderRuleAlgebra) {
  const auto cs = remove_vertices(fixture("combo"), vs({core("a"), core("b"), sv(0), sv(2)}));
  std::vector<SymbolicSubset> tame;
  for (std::size_t i = 0; i < cs->components().size(); ++i) {
    auto s = SymbolicSubset::none(cs);
    if (cs->at(i).is_family()) {
      s.set_rule(i, CopyRule::all_but({1, 3}));
      tame.push_back(s);
      s.set_rule(i, CopyRule::only({0, 2}));
    } else {
      s.assign({i, std::nullopt}, true);
    }
    tame.push_back(s);
  }
  for (const auto& a : tame) {
    ASSERT_TRUE(a.is_tame());
    for (const auto& b : tame) {
      EXPECT_TRUE(a.intersect(b).is_tame());
      EXPECT_TRUE(a.unite(b).is_tame());
      EXPECT_TRUE(a.complement().is_tame());
    }
  }
}

TEST(Le, Reflexive) {
  const auto cs = remove_vertices(fixture("comb"), vs({sv(0)}));
  const auto s = toward_component(cs, sv(3));
  EXPECT_TRUE(le(s, s));
  EXPECT_TRUE(le(s.flip(), s.flip()));
}

TEST(Le, RayNestedTowardTail) {
  const auto g = fixture("ray");
  const auto s1 = toward_component(remove_vertices(g, vs({sv(0)})), sv(5));
  const auto s2 = toward_component(remove_vertices(g, vs({sv(0), sv(1)})), sv(5));
  EXPECT_TRUE(le(s1, s2));
  EXPECT_FALSE(le(s2, s1));
}

TEST(Le, CombLeafSplitsIncomparable) {
  const auto g = fixture("comb");
  const auto c0 = remove_vertices(g, vs({sv(0)}));
  const auto c1 = remove_vertices(g, vs({sv(1)}));
  auto leaves0 = SymbolicSubset::none(c0);
  leaves0.set_rule(family_index(c0, FamilyHandle::periodic("s1", 0)), CopyRule::all());
  auto leaves1 = SymbolicSubset::none(c1);
  leaves1.set_rule(family_index(c1, FamilyHandle::periodic("s1", 1)), CopyRule::all());
  const auto a = Separation{leaves0}.away_from_side();
  const auto b = Separation{leaves1}.away_from_side();
  EXPECT_FALSE(le(a, b));
  EXPECT_FALSE(le(b, a));
}

TEST(Le, FlipReversesOrderAndTransitive) {
  for (const auto& name : fixture_names()) {
    SystemCache cache(fixture(name));
    const auto seps = sample_tame_separations(cache, {1, 2, 1});
    std::vector<OrientedSeparation> pool;
    for (std::size_t i = 0; i < seps.size() && pool.size() < 24; i += 2) {
      pool.push_back(seps[i].toward_side());
      pool.push_back(seps[i].away_from_side());
    }
    for (const auto& a : pool) {
      for (const auto& b : pool) {
        const bool ab = le(a, b);
        EXPECT_EQ(ab, le(b.flip(), a.flip())) << name;
        if (!ab) continue;
        for (const auto& c : pool) {
          if (le(b, c)) EXPECT_TRUE(le(a, c)) << name;
        }
      }
    }
  }
}

TEST(Star, SingletonIsStar) {
  const auto cs = remove_vertices(fixture("ray"), vs({sv(2)}));
  EXPECT_TRUE(is_star(Orientation({toward_component(cs, sv(0))})));
}

// {s_{C→X} : C ∈ C_X^-} ∪ {s_{C_X(Y)→X} : Y ∈ crit(X)} is a star with interior X.
TEST(Star, CanonicalStarHasInteriorX) {
  const std::pair<std::string, VertexSet> cases[] = {
      {"comb", vs({sv(0)})},
      {"combo", vs({core("a"), core("b"), core("d"), sv(0)})},
      {"thetafan", vs({core("a")})},
      {"comb", vs({sv(0), sv(1), sv(4)})},
  };
  for (const auto& [name, x] : cases) {
    const auto g = fixture(name);
    const auto cs = remove_vertices(g, x);
    std::vector<OrientedSeparation> members;
    for (auto i : cs->minus()) members.push_back(Separation{SymbolicSubset::of(cs, {{i, std::nullopt}})}.away_from_side());
    for (const auto& y : cs->critical()) members.push_back(Separation{SymbolicSubset::family_of(cs, y)}.away_from_side());
    const Orientation star(members);
    EXPECT_TRUE(is_star(star)) << name;
    const auto in = interior(g, star);
    EXPECT_TRUE(in.finite) << name;
    EXPECT_EQ(in.region.deleted_part, x) << name;
    EXPECT_TRUE(in.region.components.empty()) << name;
  }
}

TEST(Star, PointingAwayIsNotStar) {
  const auto g = fixture("ray");
  const auto s1 = toward_component(remove_vertices(g, vs({sv(2)})), sv(0));
  const auto s2 = toward_component(remove_vertices(g, vs({sv(5)})), sv(9));
  EXPECT_FALSE(is_star(Orientation({s1, s2})));
  EXPECT_EQ(error_of([&] { interior(g, Orientation({s1, s2})); }), ErrorKind::NotAStar);
}

TEST(Interior, FamilySideIsInfinite) {
  const auto g = fixture("thetafan");
  const auto cs = remove_vertices(g, vs({core("a"), core("b")}));
  auto side = SymbolicSubset::none(cs);
  side.set_rule(0, CopyRule::all());
  EXPECT_FALSE(interior(g, Orientation({Separation{side}.toward_side()})).finite);
}

TEST(Interior, EmptyStarIsWholeGraph) {
  for (const auto& name : fixture_names()) {
    const auto in = interior(fixture(name), Orientation{});
    EXPECT_FALSE(in.finite);
    EXPECT_TRUE(in.region.deleted_part.empty());
  }
}

TEST(Consistency, Basics) {
  const auto g = fixture("ray");
  EXPECT_TRUE(is_consistent(Orientation{}));
  // s_{{p2}→C<2} and s_{{p5}→tail}: flipping the first gives a smaller one
  const auto s1 = toward_component(remove_vertices(g, vs({sv(2)})), sv(0));
  const auto s2 = toward_component(remove_vertices(g, vs({sv(5)})), sv(9));
  const auto v = consistency_violation(Orientation({s1, s2}));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->first, 0u);
  EXPECT_EQ(v->second, 1u);
  EXPECT_TRUE(is_consistent(Orientation({s1.flip(), s2})));
}

TEST(Orientation, DuplicateSeparationRejected) {
  const auto cs = remove_vertices(fixture("ray"), vs({sv(2)}));
  const auto s = toward_component(cs, sv(0));
  EXPECT_EQ(error_of([&] { Orientation({s, s.flip()}); }), ErrorKind::DuplicateSeparation);
  // the same separation written through the other component
  EXPECT_EQ(error_of([&] { Orientation({s, toward_component(cs, sv(7))}); }), ErrorKind::DuplicateSeparation);
}

TEST(Tame, Examples) {
  const auto comb = remove_vertices(fixture("comb"), vs({sv(0)}));
  EXPECT_TRUE(Separation{SymbolicSubset::of(comb, {comb->locate(sv(1))})}.is_tame());
  auto parity = SymbolicSubset::none(comb);
  parity.set_rule(family_index(comb, FamilyHandle::periodic("s1", 0)), CopyRule::parity(true));
  EXPECT_FALSE(is_tame(Separation{parity}));
  EXPECT_EQ(error_of([&] { induced_orientation(PointOfGamma::end("s1"), Separation{parity}); }), ErrorKind::NotTame);

  const auto theta = remove_vertices(fixture("thetafan"), vs({core("a"), core("b")}));
  auto cof = SymbolicSubset::none(theta);
  cof.set_rule(0, CopyRule::all_but({0, 1}));
  EXPECT_TRUE(is_tame(Separation{cof}));
}

TEST(FilterType, Examples) {
  const auto g = fixture("comb");
  const auto c0 = remove_vertices(g, vs({sv(0)}));
  const auto end = filter_type(PointOfGamma::end("s1"), *c0);
  EXPECT_EQ(end.kind, FilterType::Kind::Principal);
  EXPECT_EQ(c0->at(end.component.index).tails.at(0).from_period, 1u);

  const auto c012 = remove_vertices(g, vs({sv(0), sv(1), sv(2)}));
  const auto cof = filter_type(PointOfGamma::crit(vs({sv(2)})), *c012);
  EXPECT_EQ(cof.kind, FilterType::Kind::CofiniteOnFamily);
  EXPECT_EQ(cof.y, vs({sv(2)}));

  const auto p2 = filter_type(PointOfGamma::crit(vs({sv(2)})), *c0);
  EXPECT_EQ(p2.kind, FilterType::Kind::Principal);
  EXPECT_EQ(p2.component, end.component);

  EXPECT_EQ(error_of([&] { filter_type(PointOfGamma::crit(vs({sv(2), sv(3)})), *c0); }), ErrorKind::NotCritical);
}

TEST(FilterType, DichotomyIsExclusive) {
  for (const auto& name : fixture_names()) {
    SystemCache cache(fixture(name));
    const auto pool = sample_pool(cache.graph(), {2, 3, 1});
    for (const auto& xi : gamma_points(cache.graph(), 3)) {
      for (const auto& v : pool) {
        const auto cs = cache.get(vs({v}));
        const auto f = filter_type(xi, *cs);
        const bool cofinite = xi.kind == PointOfGamma::Kind::Crit && is_subset(xi.y, cs->deleted());
        EXPECT_EQ(f.kind == FilterType::Kind::CofiniteOnFamily, cofinite);
        if (f.kind == FilterType::Kind::Principal) {
          EXPECT_NO_THROW(cs->require(f.component));
          EXPECT_TRUE(cs->at(f.component.index).is_infinite());
        }
      }
    }
  }
}

TEST(InducedOrientation, CombExamples) {
  const auto cs = remove_vertices(fixture("comb"), vs({sv(0)}));
  auto side = SymbolicSubset::none(cs);
  side.set_rule(family_index(cs, FamilyHandle::periodic("s1", 0)), CopyRule::all_but({0, 1}));
  const Separation sep{side};
  EXPECT_EQ(induced_orientation(PointOfGamma::end("s1"), sep), sep.away_from_side());
  EXPECT_EQ(induced_orientation(PointOfGamma::crit(vs({sv(0)})), sep), sep.toward_side());

  const Separation empty{SymbolicSubset::none(cs)};
  for (const auto& xi : gamma_points(cs->graph(), 3)) {
    EXPECT_EQ(induced_orientation(xi, empty), empty.away_from_side()) << xi.token();
  }
}

// s_{X→C} and s_{X→D} in the orientation force s_{X→C∩D}.
TEST(InducedOrientation, ClosedUnderIntersection) {
  for (const auto& name : fixture_names()) {
    SystemCache cache(fixture(name));
    const auto seps = sample_tame_separations(cache, {2, 2, 1});
    for (const auto& xi : gamma_points(cache.graph(), 2)) {
      std::map<VertexSet, std::vector<SymbolicSubset>> toward;
      for (const auto& s : seps) toward[s.base()].push_back(induced_orientation(xi, s).toward);
      for (const auto& [x, subsets] : toward) {
        for (const auto& c : subsets) {
          for (const auto& d : subsets) {
            const Separation meet{c.intersect(d)};
            ASSERT_TRUE(meet.is_tame());
            EXPECT_EQ(induced_orientation(xi, meet), meet.toward_side()) << name << " " << xi.token();
          }
        }
      }
    }
  }
}

TEST(InducedOrientation, PerturbationPreserved) {
  for (const auto& name : fixture_names()) {
    SystemCache cache(fixture(name));
    const auto seps = sample_tame_separations(cache, {2, 2, 1});
    for (const auto& xi : gamma_points(cache.graph(), 2)) {
      for (const auto& s : seps) {
        const auto o = induced_orientation(xi, s);
        const auto& cs = s.side.system();
        std::vector<ComponentRef> moved;
        for (std::size_t i = 0; i < cs.components().size(); ++i) {
          const auto& d = cs.at(i);
          if (d.kind == ComponentKind::Finite) moved.push_back({i, std::nullopt});
          if (d.is_family()) {
            for (std::uint64_t k = 0; k < 3; ++k) {
              if (!d.excluded.count(k)) moved.push_back({i, k});
            }
          }
        }
        const auto p = perturb(o, moved);
        EXPECT_EQ(induced_orientation(xi, p.separation()), p) << name << " " << xi.token();
      }
    }
  }
  const auto cs = remove_vertices(fixture("ray"), vs({sv(0)}));
  const auto s = toward_component(cs, sv(3));
  EXPECT_EQ(error_of([&] { perturb(s, {cs->locate(sv(3))}); }), ErrorKind::NotFinite);
}

TEST(CheckTangle, CombEndOverSmallX) {
  SystemCache cache(fixture("comb"));
  std::vector<Separation> seps;
  for (const auto& s : sample_tame_separations(cache, {2, 2, 1})) {
    if (is_subset(s.base(), vs({sv(0), sv(1)}))) seps.push_back(s);
  }
  ASSERT_GT(seps.size(), 5u);
  EXPECT_TRUE(check_tangle(cache.graph(), induced_orientation(PointOfGamma::end("s1"), seps)).ok());
}

TEST(CheckTangle, RayFiniteInteriorStar) {
  const auto g = fixture("ray");
  // toward {p2,p3,...} and toward {p0,..,p3}: interior {p2,p3}
  const auto s1 = toward_component(remove_vertices(g, vs({sv(2)})), sv(9));
  const auto s2 = toward_component(remove_vertices(g, vs({sv(3)})), sv(0));
  const Orientation o({s1, s2});
  const auto in = interior(g, o);
  EXPECT_TRUE(in.finite);
  EXPECT_EQ(in.region.deleted_part, vs({sv(2), sv(3)}));
  EXPECT_TRUE(in.region.components.empty());
  const auto verdict = check_tangle(g, o);
  ASSERT_EQ(verdict.kind, TangleVerdict::Kind::ForbiddenStar);
  // s2 alone already has a finite big side
  EXPECT_EQ(verdict.star, (std::vector<std::size_t>{1}));
}

TEST(CheckTangle, TwoInfiniteSidesWithFiniteInterior) {
  const auto g = fixture("comb");
  const auto leaf = VertexId::periodic_fan("s1", 0, 0, "l");
  const auto a = remove_vertices(g, vs({sv(0)}));
  auto leaves = SymbolicSubset::none(a);
  leaves.set_rule(family_index(a, FamilyHandle::periodic("s1", 0)), CopyRule::all());
  const auto s1 = Separation{leaves}.toward_side();
  const auto s2 = toward_component(remove_vertices(g, vs({sv(0), leaf})), sv(4));
  EXPECT_FALSE(interior(g, Orientation({s1})).finite);
  EXPECT_FALSE(interior(g, Orientation({s2})).finite);
  const auto verdict = check_tangle(g, Orientation({s1, s2}));
  ASSERT_EQ(verdict.kind, TangleVerdict::Kind::ForbiddenStar);
  EXPECT_EQ(verdict.star, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(interior(g, Orientation({s1, s2})).region.deleted_part, vs({sv(0), leaf}));
}

TEST(CheckTangle, ConsistencyViolation) {
  const auto g = fixture("ray");
  const auto s1 = toward_component(remove_vertices(g, vs({sv(2)})), sv(0));
  const auto s2 = toward_component(remove_vertices(g, vs({sv(5)})), sv(9));
  const auto verdict = check_tangle(g, Orientation({s1, s2}));
  EXPECT_EQ(verdict.kind, TangleVerdict::Kind::ConsistencyViolation);
}

TEST(CheckTangle, EveryPointInducesTangle) {
  for (const auto& name : fixture_names()) {
    SystemCache cache(fixture(name));
    const auto seps = sample_tame_separations(cache, {1, 3, 1});
    for (const auto& xi : gamma_points(cache.graph(), 3)) {
      const auto o = induced_orientation(xi, seps);
      EXPECT_TRUE(check_tangle(cache.graph(), o).ok()) << name << " " << xi.token();
    }
  }
}

TEST(Distinguish, CombCritVsCrit) {
  const auto g = fixture("comb");
  const auto d = distinguish(g, PointOfGamma::crit(vs({sv(0)})), PointOfGamma::crit(vs({sv(1)})));
  EXPECT_EQ(d.separation.base(), vs({sv(0)}));
  const auto& cs = d.separation.side.system();
  EXPECT_TRUE(d.separation.side.is_cofinite_in_family(family_index(d.separation.side.system_ptr(), FamilyHandle::periodic("s1", 0))));
  EXPECT_FALSE(d.separation.side.contains(cs.locate(sv(1))));
  EXPECT_NE(d.first, d.second);
}

TEST(Distinguish, CombEndVsCrit) {
  const auto g = fixture("comb");
  const auto d = distinguish(g, PointOfGamma::end("s1"), PointOfGamma::crit(vs({sv(0)})));
  EXPECT_EQ(d.separation.base(), vs({sv(0)}));
  auto leaves = SymbolicSubset::none(d.separation.side.system_ptr());
  leaves.set_rule(family_index(d.separation.side.system_ptr(), FamilyHandle::periodic("s1", 0)), CopyRule::all());
  EXPECT_EQ(d.separation.side, leaves);
  EXPECT_EQ(d.first, d.separation.away_from_side());
  EXPECT_EQ(d.second, d.separation.toward_side());
}

TEST(Distinguish, Errors) {
  const auto g = fixture("comb");
  EXPECT_EQ(error_of([&] { distinguish(g, PointOfGamma::end("s1"), PointOfGamma::end("s1")); }), ErrorKind::PointsEqual);
  EXPECT_EQ(error_of([&] {
              distinguish(g, PointOfGamma::end("s1"), PointOfGamma::crit(vs({sv(6)})), {.horizon = 0, .max_size = 0});
            }),
            ErrorKind::NotFoundWithinHorizon);
}

TEST(Distinguish, AllPairsOnFixtures) {
  for (const auto& name : fixture_names()) {
    const auto g = fixture(name);
    const auto points = gamma_points(g, 3);
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = 0; j < points.size(); ++j) {
        if (i == j) continue;
        const auto d = distinguish(g, points[i], points[j]);
        EXPECT_EQ(induced_orientation(points[i], d.separation), d.first);
        EXPECT_EQ(induced_orientation(points[j], d.separation), d.second);
        EXPECT_NE(d.first, d.second);
      }
    }
  }
}

TEST(PointOfGamma, TokenRoundTrip) {
  for (const auto& xi : gamma_points(fixture("combo"), 2)) EXPECT_EQ(PointOfGamma::parse(xi.token()), xi);
  EXPECT_EQ(error_of([] { PointOfGamma::parse("nowhere"); }), ErrorKind::ParseError);
}
