#include <random>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "singcontent/json_io.hpp"

using namespace singcontent;

namespace {
const std::vector<FanoPolygon>& full_corpus() {
  static const std::vector<FanoPolygon> c = corpus::full();
  return c;
}

std::array<Integer, 3> weights_of(const FanoPolygon& p) {
  auto w = wps_weights(p);
  EXPECT_TRUE(w.has_value());
  EXPECT_EQ(w->index, 1);
  return w->weights;
}

UnimodularMap random_unimodular(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3), k(-3, 3);
  UnimodularMap m = UnimodularMap::identity();
  for (int i = 0; i < 5; ++i) {
    int s = k(rng);
    switch (pick(rng)) {
      case 0: m = m.compose(UnimodularMap(1, s, 0, 1)); break;
      case 1: m = m.compose(UnimodularMap(1, 0, s, 1)); break;
      case 2: m = m.compose(UnimodularMap(0, 1, 1, 0)); break;
      default: m = m.compose(UnimodularMap(0, -1, 1, 0)); break;
    }
  }
  return m;
}

/// The dual side of a mutation: u -> u - min(0, u(f)) h on M, applied to the
/// vertices of the dual polygon and to the points where its edges cross
/// u(f) == 0.
std::set<std::pair<Rational, Rational>> mutated_dual(const FanoPolygon& p, const Factor& fac) {
  RationalPolygon q = dual(p);
  std::vector<RationalPoint> pts;
  const std::size_t n = q.vertices.size();
  auto uf = [&](const RationalPoint& u) -> Rational { return u.x * Rational(fac.f.x) + u.y * Rational(fac.f.y); };
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = q.vertices[i];
    const auto& b = q.vertices[(i + 1) % n];
    pts.push_back(a);
    Rational fa = uf(a), fb = uf(b);
    if ((fa < 0 && fb > 0) || (fa > 0 && fb < 0)) {
      Rational t = fa / (fa - fb);
      pts.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
  }
  std::vector<std::pair<Rational, Rational>> img;
  for (const auto& u : pts) {
    Rational s = std::min(Rational(0), uf(u));
    img.push_back({u.x - s * Rational(fac.h.x), u.y - s * Rational(fac.h.y)});
  }
  // hull by monotone chain, strict
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  auto cross = [](const auto& o, const auto& a, const auto& b) -> Rational {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<Rational, Rational>> hull(2 * img.size());
  std::size_t k = 0;
  for (const auto& pt : img) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0) --k;
    hull[k++] = pt;
  }
  for (std::size_t i = img.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && cross(hull[k - 2], hull[k - 1], img[i]) <= 0) --k;
    hull[k++] = img[i];
  }
  hull.resize(k - 1);
  return {hull.begin(), hull.end()};
}

std::set<std::pair<Rational, Rational>> dual_set(const FanoPolygon& p) {
  std::set<std::pair<Rational, Rational>> s;
  for (const auto& v : dual(p).vertices) s.insert({v.x, v.y});
  return s;
}
}  // namespace

TEST(Factor, Validation) {
  EXPECT_EQ(Factor::for_weight({-1, -1}).f, (LatticePoint{1, -1}));
  EXPECT_THROW(Factor::for_weight({2, 2}), std::invalid_argument);
  EXPECT_THROW(Factor::make({1, 0}, {1, 0}), std::invalid_argument);
  EXPECT_THROW(Factor::make({1, 0}, {0, 2}), std::invalid_argument);
}

TEST(Mutate, MarkovSteps) {
  FanoPolygon p2 = corpus::projective_plane();
  auto q = mutate(p2, Factor::for_weight({-1, -1}));
  ASSERT_TRUE(q);
  EXPECT_EQ(weights_of(*q), (std::array<Integer, 3>{1, 1, 4}));
  EXPECT_EQ(degree(*q), 9);
  bool reached = false;
  for (const auto& step : candidate_mutations(*q)) {
    if (weights_of(step.target) == std::array<Integer, 3>{1, 4, 25}) {
      reached = true;
      EXPECT_EQ(degree(step.target), 9);
    }
  }
  EXPECT_TRUE(reached);
}

TEST(Mutate, MissingWhenSliceTooShort) {
  // h = (1,0) has its minimum -1 only at the vertex (-1,-1)
  EXPECT_FALSE(mutate(corpus::projective_plane(), Factor::for_weight({1, 0})));
  FanoPolygon p = wps_polygon({3, 5, 11});
  for (std::size_t i = 0; i < p.size(); ++i) {
    LatticePoint dir = primitive_direction(p.vertex(i + 1) - p.vertex(i));
    for (DualVector h : {DualVector{dir.y, -dir.x}, DualVector{-dir.y, dir.x}})
      EXPECT_FALSE(mutate(p, Factor::for_weight(h)));
  }
  EXPECT_TRUE(candidate_factors(p).empty());
}

TEST(Mutate, AgreesWithDualPiecewiseLinearMap) {
  const auto& all = full_corpus();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < all.size(); i += 2) {
    for (const auto& step : candidate_mutations(all[i])) {
      EXPECT_EQ(dual_set(step.target), mutated_dual(step.source, step.factor));
      ++checked;
    }
  }
  EXPECT_GT(checked, 20u);
}

TEST(CandidateFactors, Examples) {
  FanoPolygon p2 = corpus::projective_plane();
  auto steps = candidate_mutations(p2);
  ASSERT_EQ(steps.size(), 3u);
  for (const auto& s : steps) {
    EXPECT_EQ(weights_of(s.target), (std::array<Integer, 3>{1, 1, 4}));
    EXPECT_EQ(normal_form(s.target), normal_form(steps[0].target));
  }
  FanoPolygon q2 = corpus::p_3_112_125();
  for (const auto& s : candidate_mutations(q2)) EXPECT_TRUE(same_content(s.target, q2));
  for (const auto& s : candidate_mutations(corpus::square()))
    EXPECT_TRUE(same_content(s.target, corpus::square()));
}

TEST(Mutate, InvariantsAndInvolutionOnCorpus) {
  std::size_t steps = 0;
  for (const auto& p : full_corpus()) {
    auto sc = singularity_content(p);
    Rational k2 = degree(p);
    for (const auto& s : candidate_mutations(p)) {
      ++steps;
      EXPECT_TRUE(equivalent(singularity_content(s.target), sc));
      EXPECT_EQ(degree(s.target), k2);
      auto back = mutate(s.target, Factor::make(-s.factor.h, s.factor.f));
      ASSERT_TRUE(back);
      EXPECT_EQ(normal_form(*back), normal_form(p));
    }
  }
  EXPECT_GT(steps, 100u);
}

TEST(NormalForm, Examples) {
  FanoPolygon p2 = corpus::projective_plane();
  EXPECT_EQ(normal_form(transform(p2, UnimodularMap(1, 1, 0, 1))), normal_form(p2));
  EXPECT_NE(normal_form(corpus::p_5_7_12()), normal_form(corpus::p_3_112_125()));
  NormalForm nf = normal_form(corpus::p_3_112_125());
  EXPECT_EQ(normal_form(representative(nf)), nf);
}

TEST(NormalForm, ClassFunction) {
  std::mt19937_64 rng(37);
  const auto rnd = corpus::random_polygons(100, 4242);
  for (const auto& p : rnd) {
    NormalForm nf = normal_form(p);
    EXPECT_EQ(normal_form(representative(nf)), nf);
    for (int i = 0; i < 10; ++i) EXPECT_EQ(normal_form(transform(p, random_unimodular(rng))), nf);
  }
}

TEST(NormalForm, SeparatesDifferentPolygons) {
  // same normal form implies same vertex-count and cone types
  const auto& all = full_corpus();
  std::map<NormalForm, std::size_t> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto [it, fresh] = seen.emplace(normal_form(all[i]), i);
    if (fresh) continue;
    const auto& other = all[it->second];
    EXPECT_EQ(other.size(), all[i].size());
    EXPECT_TRUE(equivalent(singularity_content(other), singularity_content(all[i]),
                           BasketComparison::Multiset));
    EXPECT_EQ(degree(other), degree(all[i]));
  }
}

TEST(SameContent, Examples) {
  EXPECT_FALSE(same_content(corpus::p_5_7_12(), corpus::p_3_112_125()));
  EXPECT_TRUE(same_content(corpus::p_5_7_12(), transform(corpus::p_5_7_12(), UnimodularMap(2, 1, 1, 1))));
  EXPECT_TRUE(same_content(corpus::projective_plane(), corpus::p114()));
}

TEST(ExploreOrbit, MarkovTree) {
  for (int d = 0; d <= 3; ++d) {
    MutationGraph g = explore_orbit(corpus::projective_plane(), d, 1000);
    std::set<std::array<Integer, 3>> expected;
    for (auto t : oracle::markov_triples(d)) expected.insert({t[0] * t[0], t[1] * t[1], t[2] * t[2]});
    std::set<std::array<Integer, 3>> got;
    for (const auto& node : g.nodes) {
      got.insert(weights_of(node.polygon));
      EXPECT_EQ(degree(node.polygon), 9);
      EXPECT_LE(node.depth, static_cast<std::size_t>(d));
    }
    EXPECT_EQ(g.nodes.size(), expected.size()) << "depth " << d;
    EXPECT_EQ(got, expected) << "depth " << d;
    EXPECT_FALSE(g.truncated);
  }
  MutationGraph g3 = explore_orbit(corpus::projective_plane(), 3, 1000);
  std::set<std::array<Integer, 3>> w3;
  for (const auto& node : g3.nodes) w3.insert(weights_of(node.polygon));
  EXPECT_EQ(w3, (std::set<std::array<Integer, 3>>{{1, 1, 1}, {1, 1, 4}, {1, 4, 25}, {1, 25, 169}, {4, 25, 841}}));
  EXPECT_EQ(g3.edges.size(), 4u);
}

TEST(ExploreOrbit, NoMutations) {
  MutationGraph g = explore_orbit(wps_polygon({3, 5, 11}), 5, 1000);
  EXPECT_EQ(g.nodes.size(), 1u);
  EXPECT_TRUE(g.edges.empty());
  MutationGraph g0 = explore_orbit(corpus::p_5_7_12(), 0, 1000);
  EXPECT_EQ(g0.nodes.size(), 1u);
}

TEST(ExploreOrbit, TruncatesAndIsDeterministic) {
  MutationGraph g = explore_orbit(corpus::projective_plane(), 3, 2);
  EXPECT_EQ(g.nodes.size(), 2u);
  EXPECT_TRUE(g.truncated);
  EXPECT_THROW(explore_orbit(corpus::projective_plane(), 1, 0), std::invalid_argument);
  FanoPolygon p = corpus::random_polygons(1, 99).front();
  EXPECT_EQ(graph_to_json(explore_orbit(p, 2, 200)).dump(), graph_to_json(explore_orbit(p, 2, 200)).dump());
  auto forms = [](const MutationGraph& g) {
    std::set<NormalForm> s;
    for (const auto& n : g.nodes) s.insert(n.form);
    return s;
  };
  EXPECT_EQ(forms(explore_orbit(p, 2, 200)),
            forms(explore_orbit(transform(p, UnimodularMap(1, 3, 0, 1)), 2, 200)));
}

TEST(ExploreOrbit, EdgesRecordAppliedFactor) {
  MutationGraph g = explore_orbit(corpus::p113(), 3, 1000);
  for (const auto& e : g.edges) {
    std::size_t other = e.discovered_from == e.from ? e.to : e.from;
    auto q = mutate(g.nodes[e.discovered_from].polygon, e.factor);
    ASSERT_TRUE(q);
    EXPECT_EQ(normal_form(*q), g.nodes[other].form);
  }
  for (const auto& node : g.nodes) {
    EXPECT_TRUE(equivalent(singularity_content(node.polygon), g.content));
    EXPECT_EQ(degree(node.polygon), Rational(25, 3));
  }
}
